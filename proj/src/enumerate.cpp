#include "sdmc/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace sdmc {
namespace {

void require_even(int n) {
  if (n < 2 || n % 2) fail(Err::odd_length, "self-dual codes need even length >= 2");
}

}  // namespace

int mass_coefficient(const FieldPtr& f, int n) {
  if (f->p() == 2) return 1;
  return (f->q() % 4 == 3 && n % 4 != 0) ? 0 : 2;
}

std::uint64_t count_self_dual(const FieldPtr& f, int n) {
  require_even(n);
  int b = mass_coefficient(f, n);
  if (b == 0) return 0;
  unsigned __int128 acc = std::uint64_t(b);
  unsigned __int128 qi = 1;
  for (int i = 1; i <= n / 2 - 1; ++i) {
    qi *= f->q();
    acc *= qi + 1;
    if (acc > (unsigned __int128)UINT64_MAX) fail(Err::size_guard, "self-dual count overflows 64 bits");
  }
  return std::uint64_t(acc);
}

namespace {

MatrixCode build_canonical(const FieldPtr& f, int n, felem b, felem c, bool explicit_bc) {
  require_even(n);
  const Field& fd = *f;
  int k = n / 2;
  Mat gen(f, k, n);
  if (fd.p() == 2) {
    for (int i = 0; i < k; ++i) {
      gen(i, i) = 1;
      gen(i, k + i) = 1;
    }
  } else if (fd.q() % 4 == 1) {
    felem a = sqrt_of_minus_one(fd);
    for (int i = 0; i < k; ++i) {
      gen(i, i) = 1;
      gen(i, k + i) = a;
    }
  } else {
    if (n % 4 != 0)
      fail(Err::no_self_dual_codes, "no self-dual codes: q = 3 mod 4 needs n to be a multiple of 4");
    if (!explicit_bc) {
      auto bc = two_square_decomposition(fd, fd.neg(1));
      b = bc.first;
      c = bc.second;
    } else if (fd.add(fd.mul(b, b), fd.mul(c, c)) != fd.neg(1)) {
      fail(Err::invalid_argument, "(b, c) must satisfy b^2 + c^2 = -1");
    }
    int h = k / 2;
    for (int i = 0; i < h; ++i) {
      gen(i, i) = 1;
      gen(i, 2 * h + i) = b;
      gen(i, 3 * h + i) = c;
      gen(h + i, h + i) = 1;
      gen(h + i, 2 * h + i) = c;
      gen(h + i, 3 * h + i) = fd.neg(b);
    }
  }
  MatrixCode code = MatrixCode::from_generator(1, n, gen);
  if (!is_self_dual(code)) fail(Err::internal, "canonical code is not self-dual");
  return code;
}

}  // namespace

MatrixCode canonical_self_dual(const FieldPtr& f, int n) { return build_canonical(f, n, 0, 0, false); }

MatrixCode canonical_self_dual_bc(const FieldPtr& f, int n, felem b, felem c) {
  if (f->p() == 2 || f->q() % 4 != 3) fail(Err::invalid_argument, "(b, c) form applies to q = 3 mod 4");
  return build_canonical(f, n, b, c, true);
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

namespace {

// Fixed-stride byte records with lexicographic index sort.
struct RecordSet {
  std::size_t stride = 0;
  std::vector<std::uint8_t> buf;

  std::size_t size() const { return stride ? buf.size() / stride : 0; }
  const std::uint8_t* at(std::size_t i) const { return buf.data() + i * stride; }
  void append(const std::uint8_t* p) { buf.insert(buf.end(), p, p + stride); }

  void sort_records() {
    std::size_t count = size();
    std::vector<std::uint32_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    const std::uint8_t* base = buf.data();
    std::size_t st = stride;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::memcmp(base + a * st, base + b * st, st) < 0;
    });
    std::vector<std::uint8_t> out(buf.size());
    for (std::size_t i = 0; i < count; ++i)
      std::memcpy(out.data() + i * st, base + idx[i] * st, st);
    buf = std::move(out);
  }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < size(); ++i)
      if (std::memcmp(at(i - 1), at(i), stride) >= 0) return false;
    return true;
  }
};

// Extend one self-orthogonal RREF subspace U (rows x n) by every isotropic
// coset of U in U^perp whose reduced representative keeps the stacked matrix
// in RREF with a new trailing pivot. Each (d+1)-dim subspace is produced by
// exactly one parent this way (drop the last RREF row to recover it), so the
// per-level dedup below never actually sees duplicates.
void extend_subspace(const FieldPtr& fptr, const Mat& u, int n, RecordSet& out) {
  const Field& f = *fptr;
  const int q = f.q();
  const int d = u.rows();

  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) {
    int p = 0;
    while (u(i, p) == 0) ++p;
    pivots[i] = p;
  }
  int maxp = d ? pivots.back() : -1;

  // Complement basis of U inside U^perp: kernel rows reduced against U and
  // against already-kept rows. Rows end up zero on every U pivot column.
  Mat kern = kernel_basis(u);
  std::vector<std::vector<felem>> comp;
  std::vector<int> comp_pivots;
  for (int r = 0; r < kern.rows(); ++r) {
    std::vector<felem> v(kern.row(r), kern.row(r) + n);
    for (int i = 0; i < d; ++i) {
      felem coeff = v[pivots[i]];
      if (coeff == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(coeff, u(i, j)));
    }
    for (std::size_t w = 0; w < comp.size(); ++w) {
      felem coeff = v[comp_pivots[w]];
      if (coeff == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(coeff, comp[w][j]));
    }
    int p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) continue;
    felem inv = f.inv(v[p]);
    for (int j = p; j < n; ++j) v[j] = f.mul(inv, v[j]);
    comp_pivots.push_back(p);
    comp.push_back(std::move(v));
  }
  const int t = int(comp.size());  // n - 2d when U is self-orthogonal

  std::vector<std::uint8_t> child(std::size_t(d + 1) * n);
  std::memcpy(child.data(), u.data().data(), std::size_t(d) * n);
  std::vector<felem> v(n), digits(t, 0);

  auto consider = [&](const std::vector<felem>& cand) {
    felem norm = 0;
    for (int j = 0; j < n; ++j) norm = f.add(norm, f.mul(cand[j], cand[j]));
    if (norm != 0) return;
    // cand is already reduced against U (complement rows are), so its pivot
    // decides whether this parent is the canonical one for the child.
    int pv = 0;
    while (cand[pv] == 0) ++pv;
    if (pv <= maxp) return;
    for (int i = 0; i < d; ++i)
      if (u(i, pv) != 0) return;
    felem inv = f.inv(cand[pv]);
    felem* dst = reinterpret_cast<felem*>(child.data()) + std::size_t(d) * n;
    for (int j = 0; j < n; ++j) dst[j] = f.mul(inv, cand[j]);
    out.append(child.data());
  };

  for (int lead = 0; lead < t; ++lead) {
    // Projective representatives: coefficient of comp[lead] is 1, earlier
    // coefficients 0, the rest swept by a base-q odometer with delta updates.
    std::copy(comp[lead].begin(), comp[lead].end(), v.begin());
    int tail = t - lead - 1;
    std::fill(digits.begin(), digits.end(), 0);
    consider(v);
    if (tail == 0) continue;
    std::uint64_t steps = 1;
    for (int i = 0; i < tail; ++i) steps *= std::uint64_t(q);
    for (std::uint64_t s = 1; s < steps; ++s) {
      for (int i = 0; i < tail; ++i) {
        felem old = digits[i];
        felem next = felem((old + 1) % q);
        digits[i] = next;
        felem delta = f.sub(next, old);
        const std::vector<felem>& w = comp[lead + 1 + i];
        for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(delta, w[j]));
        if (next != 0) break;
      }
      consider(v);
    }
  }
}

constexpr char kCensusMagic[] = "SDMCCEN1";

std::string census_cache_path(const std::string& dir, const Field& f, int n) {
  return dir + "/census_q" + std::to_string(f.q()) + "_n" + std::to_string(n) + ".cen";
}

std::vector<MatrixCode> records_to_codes(const FieldPtr& f, int n, const RecordSet& recs) {
  int k = n / 2;
  std::vector<MatrixCode> codes;
  codes.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    Mat gen(f, k, n);
    std::memcpy(gen.row(0), recs.at(i), recs.stride);
    codes.push_back(MatrixCode::from_generator(1, n, gen));
  }
  return codes;
}

std::vector<MatrixCode> build_census(const FieldPtr& f, int n, const EnumerateOptions& opts) {
  int k = n / 2;
  RecordSet level;
  level.stride = std::size_t(n);
  extend_subspace(f, Mat(f, 0, n), n, level);
  for (int d = 1; d < k; ++d) {
    RecordSet next;
    next.stride = std::size_t(d + 1) * n;
    Mat u(f, d, n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      std::memcpy(u.row(0), level.at(i), level.stride);
      extend_subspace(f, u, n, next);
      if (next.size() > kMaxCensusLevelRecords) fail(Err::size_guard, "census level exceeds its record guard");
    }
    next.sort_records();
    if (!next.strictly_increasing()) fail(Err::internal, "duplicate subspace in census level");
    level = std::move(next);
  }
  level.sort_records();
  if (!level.strictly_increasing()) fail(Err::internal, "duplicate code in census");

  std::uint64_t expected = count_self_dual(f, n);
  if (level.size() != expected)
    fail(Err::internal, "census size " + std::to_string(level.size()) + " != mass formula value " +
                            std::to_string(expected));
  (void)opts;
  return records_to_codes(f, n, level);
}

std::vector<MatrixCode> load_census_cache(const FieldPtr& f, int n, const std::string& dir) {
  std::ifstream in(census_cache_path(dir, *f, n), std::ios::binary);
  if (!in) return {};
  std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (blob.size() < 8 + 12 + 8 || std::memcmp(blob.data(), kCensusMagic, 8) != 0)
    fail(Err::io_error, "bad census cache header");
  std::size_t off = 8;
  auto get_u32 = [&](void) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(blob[off++])) << (8 * i);
    return v;
  };
  std::uint32_t p = get_u32(), e = get_u32(), deg = get_u32();
  std::uint64_t count = 0;
  for (int i = 0; i < 8; ++i) count |= std::uint64_t(std::uint8_t(blob[off++])) << (8 * i);
  if (int(p) != f->p() || int(e) != f->e() || int(deg) != n) fail(Err::io_error, "census cache mismatch");
  if (count != count_self_dual(f, n)) fail(Err::io_error, "census cache count disagrees with the mass formula");
  RecordSet recs;
  recs.stride = std::size_t(n / 2) * n;
  if (blob.size() - off != count * recs.stride) fail(Err::io_error, "census cache truncated");
  recs.buf.assign(blob.begin() + std::ptrdiff_t(off), blob.end());
  if (!recs.strictly_increasing()) fail(Err::io_error, "census cache not sorted");
  return records_to_codes(f, n, recs);
}

void save_census_cache(const FieldPtr& f, int n, const std::string& dir,
                       const std::vector<MatrixCode>& codes) {
  std::string blob(kCensusMagic, 8);
  auto put_u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) blob.push_back(char((v >> (8 * i)) & 0xFF));
  };
  put_u32(std::uint32_t(f->p()));
  put_u32(std::uint32_t(f->e()));
  put_u32(std::uint32_t(n));
  std::uint64_t count = codes.size();
  for (int i = 0; i < 8; ++i) blob.push_back(char((count >> (8 * i)) & 0xFF));
  for (const MatrixCode& c : codes) blob.append(c.key());
  std::filesystem::create_directories(dir);
  std::ofstream out(census_cache_path(dir, *f, n), std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::io_error, "cannot write census cache");
  out.write(blob.data(), std::streamsize(blob.size()));
}

}  // namespace

std::vector<MatrixCode> all_self_dual_codes(const FieldPtr& f, int n, const EnumerateOptions& opts) {
  require_even(n);
  std::uint64_t expected = count_self_dual(f, n);
  if (expected > opts.census_guard) fail(Err::size_guard, "census larger than its guard");

  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const std::vector<MatrixCode>>> memo;
  std::tuple<int, int, int> key{f->p(), f->e(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }

  std::vector<MatrixCode> codes;
  if (!opts.cache_dir.empty()) codes = load_census_cache(f, n, opts.cache_dir);
  if (codes.empty() && expected != 0) {
    codes = build_census(f, n, opts);
    if (!opts.cache_dir.empty()) save_census_cache(f, n, opts.cache_dir, codes);
  }

  std::lock_guard<std::mutex> lock(mu);
  memo[key] = std::make_shared<const std::vector<MatrixCode>>(codes);
  return codes;
}

// ---------------------------------------------------------------------------
// Orbits and classification
// ---------------------------------------------------------------------------

namespace {

struct CodeIndex {
  std::unordered_map<std::string_view, int> by_key;

  explicit CodeIndex(const std::vector<MatrixCode>& codes) {
    by_key.reserve(codes.size() * 2);
    for (int i = 0; i < int(codes.size()); ++i) by_key.emplace(codes[i].key(), i);
  }
  int find(const Mat& gen) const {
    std::string_view key(reinterpret_cast<const char*>(gen.data().data()), gen.data().size());
    auto it = by_key.find(key);
    return it == by_key.end() ? -1 : it->second;
  }
};

// gen * a re-canonicalized, without the per-call validation of apply_map.
Mat apply_raw(const Mat& gen, const Mat& a) {
  Mat prod = mul(gen, a);
  rref_in_place(prod);
  return prod;
}

}  // namespace

OrbitPartition orbit_partition(const std::vector<MatrixCode>& codes, const GeneratorSet& gens) {
  for (const Mat& g : gens.gens)
    if (!is_invertible(g)) fail(Err::singular_matrix, "orbit generator is singular");
  CodeIndex index(codes);
  OrbitPartition part;
  std::vector<bool> visited(codes.size(), false);
  for (int seed = 0; seed < int(codes.size()); ++seed) {
    if (visited[seed]) continue;
    std::vector<int> members;
    std::queue<int> todo;
    visited[seed] = true;
    todo.push(seed);
    members.push_back(seed);
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop();
      for (const Mat& g : gens.gens) {
        Mat image = apply_raw(codes[cur].gen(), g);
        int next = index.find(image);
        if (next < 0)
          fail(Err::action_escape, "group action left the code set (generator " + gens.label + ")");
        if (!visited[next]) {
          visited[next] = true;
          todo.push(next);
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    int rep = *std::min_element(members.begin(), members.end(), [&](int a, int b) {
      return codes[a].key() < codes[b].key();
    });
    part.classes.push_back(std::move(members));
    part.representatives.push_back(rep);
  }
  return part;
}

namespace {

ClassificationReport classify_common(const FieldPtr& f, int l, int m,
                                     const std::vector<MatrixCode>& census,
                                     const GeneratorSet& gens, std::uint64_t group_order,
                                     bool block) {
  ClassificationReport report;
  report.field = f;
  report.l = l;
  report.m = m;
  report.total_codes = census.size();
  report.group_order = group_order;
  report.block = block;

  OrbitPartition part = orbit_partition(census, gens);
  for (std::size_t ci = 0; ci < part.classes.size(); ++ci) {
    ClassSummary s{MatrixCode::from_generator(l, m, census[part.representatives[ci]].gen()),
                   part.classes[ci].size(),
                   0,
                   {},
                   {},
                   false};
    if (group_order % s.class_size != 0)
      fail(Err::internal, "orbit size does not divide the group order");
    s.aut_order = group_order / s.class_size;
    s.rank_dist = rank_weight_distribution(s.rep);
    s.hamming_dist = hamming_weight_distribution(s.rep);
    s.mrd = s.rep.k() > 0 && is_mrd(s.rep);
    report.classes.push_back(std::move(s));
  }
  auto sort_key = [block](const ClassSummary& s) {
    return std::make_pair(block ? s.hamming_dist.counts : s.rank_dist.counts, s.rep.key());
  };
  std::sort(report.classes.begin(), report.classes.end(),
            [&](const ClassSummary& a, const ClassSummary& b) { return sort_key(a) < sort_key(b); });
  return report;
}

}  // namespace

ClassificationReport classify(const FieldPtr& f, int l, int m, const EnumerateOptions& opts) {
  if (l < 1 || m < 1) fail(Err::invalid_argument, "matrix dimensions must be positive");
  if (l > m) std::swap(l, m);
  int n = l * m;
  std::vector<MatrixCode> census = all_self_dual_codes(f, n, opts);
  std::vector<MatrixCode> shaped;
  shaped.reserve(census.size());
  for (const MatrixCode& c : census) shaped.push_back(MatrixCode::from_generator(l, m, c.gen()));
  GeneratorSet gens = equiv_sd_generators(f, l, m);
  return classify_common(f, l, m, shaped, gens, equiv_sd_order(f, l, m), false);
}

std::uint64_t scalar_monomial_order(const FieldPtr& f, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  std::tuple<int, int, int> key{f->p(), f->e(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::uint64_t order = group_order(scalar_monomial_generators(f, n));
  std::lock_guard<std::mutex> lock(mu);
  memo[key] = order;
  return order;
}

ClassificationReport classify_block(const FieldPtr& f, int n, const EnumerateOptions& opts) {
  std::vector<MatrixCode> census = all_self_dual_codes(f, n, opts);
  GeneratorSet gens = scalar_monomial_generators(f, n);
  return classify_common(f, 1, n, census, gens, scalar_monomial_order(f, n), true);
}

MassCheckResult mass_check(const ClassificationReport& report) {
  MassCheckResult r;
  r.expected_count = count_self_dual(report.field, report.l * report.m);
  r.census_count = report.total_codes;
  r.orbit_total = 0;
  r.ok = true;
  for (const ClassSummary& s : report.classes) {
    r.orbit_total += s.class_size;
    std::uint64_t residual = report.group_order % s.class_size;
    r.residuals.push_back(residual);
    if (residual != 0 || s.aut_order * s.class_size != report.group_order) r.ok = false;
  }
  if (r.orbit_total != r.expected_count || r.census_count != r.expected_count) r.ok = false;
  return r;
}

// ---------------------------------------------------------------------------
// Stabilizer certificate and double cosets
// ---------------------------------------------------------------------------

namespace {

struct StabChecker {
  MatrixCode canon;
  Mat s, s_inv;
  int k;

  StabChecker(const FieldPtr& f, int n) : canon(canonical_self_dual(f, n)), k(n / 2) {
    // canonical generator is [I_k | M]
    const Mat& gen = canon.gen();
    s = Mat(f, n, n);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) s(i, j) = gen(i, j);
      s(k + i, i) = 1;
    }
    s_inv = inverse(s);
  }

  bool fixes_code(const Mat& a) const { return apply_raw(canon.gen(), a).data() == canon.gen().data(); }

  bool structural_form(const Mat& a) const {
    Mat x = mul(mul(s, a), s_inv);
    int n = x.rows();
    for (int i = 0; i < k; ++i)
      for (int j = k; j < n; ++j)
        if (x(i, j) != 0) return false;
    Mat top(x.field(), k, k), bottom(x.field(), k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        top(i, j) = x(i, j);
        bottom(i, j) = x(k + i, k + j);
      }
    return is_invertible(top) && is_invertible(bottom);
  }

  bool check(const Mat& a) const {
    bool fixes = fixes_code(a);
    if (fixes != structural_form(a))
      fail(Err::internal, "stabilizer certificate routes disagree");
    return fixes;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// Small generating subset of a subgroup given its full element list.
std::vector<Mat> generating_subset(const FieldPtr& f, int n, const std::vector<Mat>& elements) {
  GeneratorSet gens{f, n, "subset", {}};
  std::unordered_map<std::string, bool> in_closure;
  in_closure[Mat::identity(f, n).key()] = true;
  for (const Mat& e : elements) {
    if (in_closure.count(e.key())) continue;
    gens.gens.push_back(e);
    in_closure.clear();
    for (const Mat& x : group_closure(gens).elements) in_closure[x.key()] = true;
  }
  return gens.gens;
}

}  // namespace

bool stab_certificate(const FieldPtr& f, int n, const Mat& a) {
  if (a.rows() != n || a.cols() != n) fail(Err::dimension_mismatch, "stabilizer candidate must be n x n");
  if (!is_invertible(a)) fail(Err::singular_matrix, "stabilizer candidate is singular");
  return StabChecker(f, n).check(a);
}

std::uint64_t double_coset_classes(const FieldPtr& f, int l, int m, const EnumerateOptions& opts) {
  (void)opts;
  if (l > m) std::swap(l, m);
  int n = l * m;
  bool supported = (n <= 4 && f->q() <= 5) || (f->p() == 2 && f->e() == 1 && n == 6);
  if (!supported) fail(Err::unsupported_size, "double cosets supported for lm <= 4 (q <= 5) and (q, lm) = (2, 6)");

  std::vector<Mat> go = go_elements(f, n);
  std::unordered_map<std::string_view, int> index;
  index.reserve(go.size() * 2);
  for (int i = 0; i < int(go.size()); ++i)
    index.emplace(std::string_view(reinterpret_cast<const char*>(go[i].data().data()), go[i].data().size()), i);
  auto index_of = [&](const Mat& x) {
    auto it = index.find(std::string_view(reinterpret_cast<const char*>(x.data().data()), x.data().size()));
    if (it == index.end()) fail(Err::internal, "product left GO_n");
    return it->second;
  };

  StabChecker checker(f, n);
  std::vector<Mat> stab;
  for (const Mat& a : go)
    if (checker.check(a)) stab.push_back(a);
  std::vector<Mat> stab_gens = generating_subset(f, n, stab);

  std::vector<Mat> equiv_gens = equiv_sd_generators(f, l, m).gens;
  for (const Mat& g : equiv_gens) (void)index_of(g);  // they live in GO_n

  UnionFind uf(go.size());
  for (int i = 0; i < int(go.size()); ++i) {
    for (const Mat& h : stab_gens) uf.unite(i, index_of(mul(h, go[i])));
    for (const Mat& g : equiv_gens) uf.unite(i, index_of(mul(go[i], g)));
  }
  std::uint64_t roots = 0;
  for (int i = 0; i < int(go.size()); ++i)
    if (uf.find(i) == i) ++roots;
  return roots;
}

bool transitivity_check(const FieldPtr& f, int n, const EnumerateOptions& opts) {
  bool supported = (f->p() != 2 && n <= 8) || (f->p() == 2 && f->e() == 1 && n <= 6);
  if (!supported) fail(Err::unsupported_size, "transitivity check supported for odd q (n <= 8) and q = 2 (n <= 6)");
  std::vector<MatrixCode> census = all_self_dual_codes(f, n, opts);
  MatrixCode canon = canonical_self_dual(f, n);

  CodeIndex index(census);
  int seed = index.find(canon.gen());
  if (seed < 0) fail(Err::internal, "canonical code missing from the census");
  GeneratorSet gens = go_generators(f, n);
  std::vector<bool> visited(census.size(), false);
  std::queue<int> todo;
  visited[seed] = true;
  todo.push(seed);
  std::size_t orbit = 1;
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const Mat& g : gens.gens) {
      Mat image = apply_raw(census[cur].gen(), g);
      int next = index.find(image);
      if (next < 0) fail(Err::internal, "GO image of a self-dual code missing from the census");
      if (!visited[next]) {
        visited[next] = true;
        ++orbit;
        todo.push(next);
      }
    }
  }
  return orbit == census.size();
}

}  // namespace sdmc
