#include "sdmc/group.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <queue>
#include <random>
#include <unordered_set>

namespace sdmc {
namespace {

Mat permutation_matrix(const FieldPtr& f, const std::vector<int>& sigma) {
  Mat p(f, int(sigma.size()), int(sigma.size()));
  for (int i = 0; i < int(sigma.size()); ++i) p(i, sigma[i]) = 1;
  return p;
}

Mat scalar_matrix(const FieldPtr& f, int n, felem c) {
  Mat s(f, n, n);
  for (int i = 0; i < n; ++i) s(i, i) = c;
  return s;
}

void check_degree(int n) {
  if (n < 1) fail(Err::invalid_argument, "group degree must be >= 1");
}

}  // namespace

std::optional<felem> is_similitude(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Mat g = mul(a, transpose(a));
  felem lambda = g(0, 0);
  if (lambda == 0) return std::nullopt;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (g(i, j) != (i == j ? lambda : 0)) return std::nullopt;
  return lambda;
}

GeneratorSet scalar_monomial_generators(FieldPtr f, int n) {
  check_degree(n);
  GeneratorSet gs{f, n, "scalar_monomial", {}};
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = j;
    std::swap(sigma[i], sigma[i + 1]);
    gs.gens.push_back(permutation_matrix(f, sigma));
  }
  Mat d = Mat::identity(f, n);
  d(0, 0) = f->neg(1);
  gs.gens.push_back(std::move(d));
  gs.gens.push_back(scalar_matrix(f, n, f->primitive_element()));
  return gs;
}

GeneratorSet monomial_generators(FieldPtr f, int n) {
  check_degree(n);
  GeneratorSet gs{f, n, "monomial", {}};
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = j;
    std::swap(sigma[i], sigma[i + 1]);
    gs.gens.push_back(permutation_matrix(f, sigma));
  }
  Mat d = Mat::identity(f, n);
  d(0, 0) = f->primitive_element();
  gs.gens.push_back(std::move(d));
  return gs;
}

GeneratorSet gl_generators(FieldPtr f, int n) {
  check_degree(n);
  GeneratorSet gs{f, n, "gl", {}};
  Mat d = Mat::identity(f, n);
  d(0, 0) = f->primitive_element();
  gs.gens.push_back(std::move(d));
  if (n >= 2) {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gs.gens.push_back(permutation_matrix(f, cycle));
    Mat t = Mat::identity(f, n);
    t(0, 1) = 1;
    gs.gens.push_back(std::move(t));
  }
  return gs;
}

std::vector<Mat> go_enumerate_backtracking(const FieldPtr& f, int n) {
  check_degree(n);
  const Field& fd = *f;
  const int q = fd.q();
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) space *= std::uint64_t(q);

  std::vector<std::vector<felem>> vectors(space, std::vector<felem>(n));
  for (std::uint64_t t = 0; t < space; ++t) {
    std::uint64_t x = t;
    for (int i = n - 1; i >= 0; --i) {  // lexicographic in row-reading order
      vectors[t][i] = felem(x % q);
      x /= q;
    }
  }
  auto dot = [&](const std::vector<felem>& a, const std::vector<felem>& b) {
    felem s = 0;
    for (int i = 0; i < n; ++i) s = fd.add(s, fd.mul(a[i], b[i]));
    return s;
  };

  std::vector<Mat> out;
  std::vector<const std::vector<felem>*> rows;
  for (int lv = 1; lv < q; ++lv) {
    felem lambda = felem(lv);
    std::vector<const std::vector<felem>*> cands;
    for (const auto& v : vectors)
      if (dot(v, v) == lambda) cands.push_back(&v);

    // DFS over rows; pairwise orthogonality plus the common self-inner
    // product lambda forces invertibility.
    auto extend = [&](auto&& self, const std::vector<const std::vector<felem>*>& avail) -> void {
      if (int(rows.size()) == n) {
        Mat a(f, n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) a(i, j) = (*rows[i])[j];
        out.push_back(std::move(a));
        return;
      }
      for (const auto* v : avail) {
        std::vector<const std::vector<felem>*> next;
        next.reserve(avail.size());
        for (const auto* w : avail)
          if (dot(*v, *w) == 0) next.push_back(w);
        rows.push_back(v);
        self(self, next);
        rows.pop_back();
      }
    };
    extend(extend, cands);
  }
  std::sort(out.begin(), out.end(), [](const Mat& a, const Mat& b) { return a.data() < b.data(); });
  return out;
}

GeneratorSet go_generators(FieldPtr f, int n) {
  check_degree(n);
  const Field& fd = *f;
  GeneratorSet gs{f, n, "go", {}};

  if (fd.p() == 2) {
    if (n > 6) fail(Err::unsupported_size, "GO over even q is enumerated exhaustively only for n <= 6");
    gs.gens = go_enumerate_backtracking(f, n);
    return gs;
  }

  // Reflections r_v = I - 2 (v^T v) / (v.v) through every anisotropic v, one
  // per projective point.
  const int q = fd.q();
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) space *= std::uint64_t(q);
  std::vector<felem> v(n);
  for (std::uint64_t t = 0; t < space; ++t) {
    std::uint64_t x = t;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = felem(x % q);
      x /= q;
    }
    int lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n || v[lead] != 1) continue;  // projective representative
    felem norm = 0;
    for (int i = 0; i < n; ++i) norm = fd.add(norm, fd.mul(v[i], v[i]));
    if (norm == 0) continue;
    felem c = fd.mul(fd.add(1, 1), fd.inv(norm));  // 2 / (v.v)
    Mat r = Mat::identity(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = fd.sub(r(i, j), fd.mul(c, fd.mul(v[i], v[j])));
    gs.gens.push_back(std::move(r));
  }

  for (int mu = 1; mu < q; ++mu) gs.gens.push_back(scalar_matrix(f, n, felem(mu)));

  if (n % 2 == 0) {
    // One similitude of non-square character; with the scalars this reaches
    // every character. Odd n forces square characters, so nothing to add.
    felem nu = smallest_non_square(fd);
    auto [a, b] = two_square_decomposition(fd, nu);
    Mat blk(f, n, n);
    for (int i = 0; i < n; i += 2) {
      blk(i, i) = a;
      blk(i, i + 1) = b;
      blk(i + 1, i) = fd.neg(b);
      blk(i + 1, i + 1) = a;
    }
    gs.gens.push_back(std::move(blk));
  }
  return gs;
}

GeneratorSet equiv_generators(FieldPtr f, int l, int m) {
  GeneratorSet gs{f, l * m, "equiv", {}};
  Mat il = Mat::identity(f, l), im = Mat::identity(f, m);
  for (const Mat& g : gl_generators(f, l).gens) gs.gens.push_back(kronecker(transpose(g), im));
  for (const Mat& g : gl_generators(f, m).gens) gs.gens.push_back(kronecker(il, g));
  if (l == m) gs.gens.push_back(transposition_matrix(f, m));
  return gs;
}

GeneratorSet equiv_sd_generators(FieldPtr f, int l, int m) {
  GeneratorSet gs{f, l * m, "equiv_sd", {}};
  Mat il = Mat::identity(f, l), im = Mat::identity(f, m);
  for (const Mat& g : go_generators(f, l).gens) gs.gens.push_back(kronecker(transpose(g), im));
  for (const Mat& g : go_generators(f, m).gens) gs.gens.push_back(kronecker(il, g));
  if (l == m) gs.gens.push_back(transposition_matrix(f, m));
  return gs;
}

GroupClosure group_closure(const GeneratorSet& gens, std::uint64_t cap) {
  if (!gens.field) fail(Err::invalid_argument, "generator set without a field");
  for (const Mat& g : gens.gens) {
    if (g.rows() != gens.n || g.cols() != gens.n) fail(Err::dimension_mismatch, "generator degree mismatch");
    if (!is_invertible(g)) fail(Err::singular_matrix, "generator is singular");
  }

  GroupClosure out;
  std::unordered_set<std::string> seen;
  std::queue<std::size_t> todo;
  Mat id = Mat::identity(gens.field, gens.n);
  seen.insert(id.key());
  out.elements.push_back(std::move(id));
  todo.push(0);
  while (!todo.empty()) {
    std::size_t cur = todo.front();
    todo.pop();
    for (const Mat& g : gens.gens) {
      Mat prod = mul(out.elements[cur], g);
      if (seen.insert(prod.key()).second) {
        if (out.elements.size() + 1 > cap) fail(Err::cap_exceeded, "group closure exceeded its cap");
        out.elements.push_back(std::move(prod));
        todo.push(out.elements.size() - 1);
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Mat& a, const Mat& b) { return a.data() < b.data(); });
  out.order = out.elements.size();
  return out;
}

namespace {

// Packed monomial element for n <= 8, q <= 16: nibble i of the low word is
// sigma(i), nibble i of the high word is the diagonal entry of row i, for the
// matrix with row i equal to d[i] * e_{sigma(i)}.
struct PackedMonomialGroup {
  const Field* f = nullptr;
  int n = 0;
  std::vector<std::uint64_t> gens;

  std::uint64_t compose(std::uint64_t x, std::uint64_t g) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
      unsigned sx = unsigned(x >> (4 * i)) & 0xF;
      unsigned sg = unsigned(g >> (4 * sx)) & 0xF;
      felem dx = felem((x >> (32 + 4 * i)) & 0xF);
      felem dg = felem((g >> (32 + 4 * sx)) & 0xF);
      felem d = f->mul(dx, dg);
      r |= (std::uint64_t(sg) << (4 * i)) | (std::uint64_t(d) << (32 + 4 * i));
    }
    return r;
  }
};

std::optional<PackedMonomialGroup> pack_monomial_group(const GeneratorSet& gens) {
  if (gens.n > 8 || !gens.field || gens.field->q() > 16) return std::nullopt;
  PackedMonomialGroup pg;
  pg.f = gens.field.get();
  pg.n = gens.n;
  for (const Mat& g : gens.gens) {
    std::uint64_t packed = 0;
    std::vector<bool> col_used(gens.n, false);
    for (int i = 0; i < gens.n; ++i) {
      int col = -1;
      for (int j = 0; j < gens.n; ++j) {
        if (g(i, j) != 0) {
          if (col >= 0) return std::nullopt;
          col = j;
        }
      }
      if (col < 0 || col_used[col]) return std::nullopt;
      col_used[col] = true;
      packed |= (std::uint64_t(col) << (4 * i)) | (std::uint64_t(g(i, col)) << (32 + 4 * i));
    }
    pg.gens.push_back(packed);
  }
  return pg;
}

std::uint64_t packed_monomial_order(const PackedMonomialGroup& pg, std::uint64_t cap) {
  std::uint64_t id = 0;
  for (int i = 0; i < pg.n; ++i) id |= (std::uint64_t(i) << (4 * i)) | (std::uint64_t(1) << (32 + 4 * i));

  std::vector<std::uint64_t> elements{id}, frontier{id}, cand, fresh;
  while (!frontier.empty()) {
    cand.clear();
    cand.reserve(frontier.size() * pg.gens.size());
    for (std::uint64_t x : frontier)
      for (std::uint64_t g : pg.gens) cand.push_back(pg.compose(x, g));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    fresh.clear();
    std::set_difference(cand.begin(), cand.end(), elements.begin(), elements.end(),
                        std::back_inserter(fresh));
    if (elements.size() + fresh.size() > cap) fail(Err::cap_exceeded, "group closure exceeded its cap");
    std::size_t old = elements.size();
    elements.insert(elements.end(), fresh.begin(), fresh.end());
    std::inplace_merge(elements.begin(), elements.begin() + old, elements.end());
    frontier = fresh;
  }
  return elements.size();
}

}  // namespace

std::uint64_t group_order(const GeneratorSet& gens, std::uint64_t cap) {
  if (auto pg = pack_monomial_group(gens)) return packed_monomial_order(*pg, cap);
  return group_closure(gens, cap).order;
}

std::uint64_t gl_order(const FieldPtr& f, int n) {
  check_degree(n);
  unsigned __int128 acc = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= f->q();
  unsigned __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    acc *= qn - qi;
    qi *= f->q();
    if (acc > (unsigned __int128)UINT64_MAX) fail(Err::unsupported_size, "|GL_n| overflows 64 bits");
  }
  return std::uint64_t(acc);
}

std::uint64_t go_order(const FieldPtr& f, int n) {
  check_degree(n);
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::uint64_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({f->p(), f->e(), n});
    if (it != cache.end()) return it->second;
  }
  std::uint64_t order;
  if (f->p() == 2) {
    if (n > 6) fail(Err::unsupported_size, "GO over even q is enumerated exhaustively only for n <= 6");
    order = go_enumerate_backtracking(f, n).size();
  } else {
    order = group_closure(go_generators(f, n)).order;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[{f->p(), f->e(), n}] = order;
  return order;
}

std::vector<Mat> go_elements(const FieldPtr& f, int n, std::uint64_t cap) {
  if (f->p() == 2) {
    if (n > 6) fail(Err::unsupported_size, "GO over even q is enumerated exhaustively only for n <= 6");
    return go_enumerate_backtracking(f, n);
  }
  return group_closure(go_generators(f, n), cap).elements;
}

GeneratorSet go_generators_random(FieldPtr f, int n, std::uint64_t seed) {
  if (f->p() != 2) fail(Err::unsupported_size, "randomized GO construction is the even-q path");
  std::uint64_t target = go_order(f, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, f->q() - 1);
  GeneratorSet gs{f, n, "go_random", {}};
  for (int attempts = 0; attempts < 200000; ++attempts) {
    Mat a(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = felem(entry(rng));
    if (!is_similitude(a)) continue;
    gs.gens.push_back(a);
    if (group_closure(gs).order == target) return gs;
  }
  fail(Err::internal, "randomized GO construction failed to reach the target order");
}

std::uint64_t equiv_order(const FieldPtr& f, int l, int m) {
  check_degree(l);
  check_degree(m);
  unsigned __int128 acc = gl_order(f, l) / std::uint64_t(f->q() - 1);
  acc *= gl_order(f, m);
  if (l == m) acc *= 2;
  if (acc > (unsigned __int128)UINT64_MAX) fail(Err::unsupported_size, "equivalence group order overflows 64 bits");
  return std::uint64_t(acc);
}

std::uint64_t equiv_sd_order(const FieldPtr& f, int l, int m) {
  check_degree(l);
  check_degree(m);
  unsigned __int128 acc = go_order(f, l) / std::uint64_t(f->q() - 1);
  acc *= go_order(f, m);
  if (l == m) acc *= 2;
  if (acc > (unsigned __int128)UINT64_MAX) fail(Err::unsupported_size, "equivalence group order overflows 64 bits");
  return std::uint64_t(acc);
}

namespace {

void put_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(char((v >> (8 * i)) & 0xFF));
}
std::uint32_t get_u32(const std::string& s, std::size_t& off) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(s[off++])) << (8 * i);
  return v;
}
std::uint64_t get_u64(const std::string& s, std::size_t& off) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(s[off++])) << (8 * i);
  return v;
}

constexpr char kGroupMagic[] = "SDMCGRP1";

std::string group_cache_path(const std::string& dir, const std::string& label, const Field& f, int n) {
  return dir + "/" + label + "_q" + std::to_string(f.q()) + "_n" + std::to_string(n) + ".grp";
}

}  // namespace

void save_group_cache(const std::string& dir, const std::string& label, const GroupClosure& closure) {
  if (closure.elements.empty()) fail(Err::invalid_argument, "cannot cache an empty closure");
  const Mat& first = closure.elements.front();
  const Field& f = *first.field();
  int n = first.rows();
  std::string blob(kGroupMagic, 8);
  put_u32(blob, std::uint32_t(label.size()));
  blob += label;
  put_u32(blob, std::uint32_t(f.p()));
  put_u32(blob, std::uint32_t(f.e()));
  put_u32(blob, std::uint32_t(n));
  put_u64(blob, closure.order);
  for (const Mat& m : closure.elements) blob.append(m.data().begin(), m.data().end());

  std::filesystem::create_directories(dir);
  std::ofstream out(group_cache_path(dir, label, f, n), std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::io_error, "cannot write group cache");
  out.write(blob.data(), std::streamsize(blob.size()));
}

std::optional<GroupClosure> load_group_cache(const std::string& dir, const std::string& label,
                                             const FieldPtr& f, int n) {
  std::ifstream in(group_cache_path(dir, label, *f, n), std::ios::binary);
  if (!in) return std::nullopt;
  std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t off = 0;
  if (blob.size() < 8 || std::memcmp(blob.data(), kGroupMagic, 8) != 0) fail(Err::io_error, "bad group cache magic");
  off = 8;
  std::uint32_t label_len = get_u32(blob, off);
  std::string stored_label = blob.substr(off, label_len);
  off += label_len;
  std::uint32_t p = get_u32(blob, off), e = get_u32(blob, off), deg = get_u32(blob, off);
  std::uint64_t order = get_u64(blob, off);
  if (stored_label != label || int(p) != f->p() || int(e) != f->e() || int(deg) != n)
    fail(Err::io_error, "group cache header mismatch");
  std::size_t stride = std::size_t(n) * n;
  if (blob.size() - off != order * stride) fail(Err::io_error, "group cache truncated");
  GroupClosure closure;
  closure.order = order;
  closure.elements.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) {
    Mat m(f, n, n);
    for (std::size_t j = 0; j < stride; ++j) m(int(j / n), int(j % n)) = felem(std::uint8_t(blob[off + j]));
    off += stride;
    closure.elements.push_back(std::move(m));
  }
  return closure;
}

}  // namespace sdmc
