#include "planemod/groups.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "planemod/parse.hpp"

namespace planemod {
namespace {

std::atomic<std::size_t> g_group_ceiling{kDefaultGroupOrderCeiling};

std::vector<int> invert_table(const std::vector<std::vector<int>>& t) {
  const std::size_t n = t.size();
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] == 0) {
        inv[i] = static_cast<int>(j);
        break;
      }
  return inv;
}

bool contains_sorted(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

std::size_t group_order_ceiling() noexcept { return g_group_ceiling.load(); }
void set_group_order_ceiling(std::size_t ceiling) noexcept { g_group_ceiling.store(ceiling); }

// ---------------------------------------------------------------------------
// AbstractGroup

AbstractGroup::AbstractGroup() : table_{{0}}, inv_{0} {}

AbstractGroup::AbstractGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)), inv_(invert_table(table_)) {}

AbstractGroup AbstractGroup::trusted(std::vector<std::vector<int>> table) {
  return AbstractGroup(std::move(table));
}

AbstractGroup AbstractGroup::from_table(std::vector<std::vector<int>> table) {
  const std::size_t n = table.size();
  if (n == 0) raise(Errc::InvalidArgument, "empty multiplication table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) raise(Errc::InvalidArgument, "table is not square");
    std::vector<char> seen_row(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen_row[v])
        raise(Errc::InvalidArgument, "table row is not a permutation");
      seen_row[v] = 1;
    }
    if (table[0][i] != static_cast<int>(i) || table[i][0] != static_cast<int>(i))
      raise(Errc::InvalidArgument, "index 0 is not the identity");
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<char> seen_col(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen_col[table[i][j]]) raise(Errc::InvalidArgument, "table column is not a permutation");
      seen_col[table[i][j]] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          raise(Errc::InvalidArgument, "table is not associative");
  return AbstractGroup(std::move(table));
}

int AbstractGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = table_[x][a];
    ++k;
  }
  return k;
}

int AbstractGroup::power(int a, std::int64_t e) const {
  if (e < 0) return power(inv_[a], -e);
  int acc = 0, base = a;
  while (e > 0) {
    if (e & 1) acc = table_[acc][base];
    base = table_[base][base];
    e >>= 1;
  }
  return acc;
}

bool AbstractGroup::is_abelian() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

Subset AbstractGroup::all() const {
  Subset s(size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Subset AbstractGroup::generated(const std::vector<int>& gens) const {
  std::vector<char> in(size(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      const int p = table_[elems[i]][g];
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool AbstractGroup::is_subgroup(const Subset& h) const {
  if (h.empty() || h[0] != 0) return false;
  for (int a : h)
    for (int b : h)
      if (!contains_sorted(h, table_[a][b])) return false;
  return true;
}

Subset AbstractGroup::conjugate(const Subset& h, int g) const {
  Subset out;
  out.reserve(h.size());
  for (int x : h) out.push_back(table_[table_[g][x]][inv_[g]]);
  std::sort(out.begin(), out.end());
  return out;
}

bool AbstractGroup::is_normal(const Subset& h) const {
  for (int g : generating_set())
    if (conjugate(h, g) != h) return false;
  return true;
}

Subset AbstractGroup::centralizer(int g) const {
  Subset out;
  for (int x = 0; x < size(); ++x)
    if (table_[x][g] == table_[g][x]) out.push_back(x);
  return out;
}

Subset AbstractGroup::center() const {
  Subset out;
  const std::vector<int> gens = generating_set();
  for (int x = 0; x < size(); ++x) {
    bool central = true;
    for (int g : gens)
      if (table_[x][g] != table_[g][x]) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

Subset AbstractGroup::normalizer(const Subset& h) const {
  Subset out;
  for (int g = 0; g < size(); ++g)
    if (conjugate(h, g) == h) out.push_back(g);
  return out;
}

Subset AbstractGroup::derived_subgroup() const {
  std::vector<char> seen(size(), 0);
  std::vector<int> comms;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      const int c = table_[table_[inv_[a]][inv_[b]]][table_[a][b]];
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated(comms);
}

std::vector<int> AbstractGroup::generating_set() const { return generating_set(all()); }

std::vector<int> AbstractGroup::generating_set(const Subset& h) const {
  // prefer elements of large order so the sets stay small
  std::vector<int> cand(h.begin(), h.end());
  std::stable_sort(cand.begin(), cand.end(),
                   [this](int a, int b) { return element_order(a) > element_order(b); });
  std::vector<int> gens;
  Subset cur{0};
  for (int c : cand) {
    if (cur.size() == h.size()) break;
    if (contains_sorted(cur, c)) continue;
    gens.push_back(c);
    cur = generated(gens);
  }
  return gens;
}

AbstractGroup AbstractGroup::subgroup(const Subset& h, std::vector<int>* index_map) const {
  if (!is_subgroup(h)) raise(Errc::NotASubgroup, "subset is not a subgroup");
  std::vector<int> local(size(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) local[h[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(h.size(), std::vector<int>(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) t[i][j] = local[table_[h[i]][h[j]]];
  if (index_map) *index_map = h;
  return AbstractGroup(std::move(t));
}

AbstractGroup AbstractGroup::quotient(const Subset& h, std::vector<int>* projection) const {
  if (!is_subgroup(h)) raise(Errc::NotASubgroup, "subset is not a subgroup");
  if (!is_normal(h)) raise(Errc::NotNormal, "subgroup is not normal");
  std::vector<int> coset(size(), -1);
  std::vector<int> reps;
  for (int g = 0; g < size(); ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int x : h) coset[table_[g][x]] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = coset[table_[reps[i]][reps[j]]];
  if (projection) *projection = coset;
  return AbstractGroup(std::move(t));
}

std::string AbstractGroup::to_json() const {
  nlohmann::json j;
  j["size"] = size();
  j["table"] = table_;
  return j.dump();
}

AbstractGroup AbstractGroup::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
  if (!j.contains("size") || !j.contains("table")) raise(Errc::ParseError, "missing size or table");
  auto table = j["table"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != j["size"].get<int>())
    raise(Errc::ParseError, "size does not match table");
  return from_table(std::move(table));
}

AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[a1 * nb + b1][a2 * nb + b2] = a.mul(a1, a2) * nb + b.mul(b1, b2);
  return AbstractGroup::trusted(std::move(t));
}

// ---------------------------------------------------------------------------
// fingerprints and isomorphism

namespace {

/// Invariant factors of an abelian group from its element-order data.
std::vector<std::int64_t> abelian_invariants_of(const AbstractGroup& g) {
  const int n = g.size();
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = g.element_order(x);
  // per prime p: exponents e_1 >= e_2 >= ... of the p-primary part
  std::vector<std::vector<int>> parts;
  std::vector<std::int64_t> primes;
  for (auto [p, k] : nt::factor(n)) {
    // c_t = log_p #{x : x^{p^t} = 1} = sum_i min(t, e_i)
    std::vector<int> c{0};
    std::int64_t pt = 1;
    for (int t = 1; t <= k; ++t) {
      pt *= p;
      std::int64_t count = 0;
      for (int x = 0; x < n; ++x)
        if (pt % orders[x] == 0) ++count;
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      c.push_back(lg);
    }
    // number of e_i >= t is c_t - c_{t-1}
    std::vector<int> exps;
    for (int t = k; t >= 1; --t) {
      const int ge_t = c[t] - c[t - 1];
      const int ge_next = (t < k) ? c[t + 1] - c[t] : 0;
      for (int r = 0; r < ge_t - ge_next; ++r) exps.push_back(t);
    }
    parts.push_back(exps);
    primes.push_back(p);
  }
  std::size_t len = 0;
  for (const auto& e : parts) len = std::max(len, e.size());
  std::vector<std::int64_t> inv(len, 1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t r = 0; r < parts[i].size(); ++r)
      for (int t = 0; t < parts[i][r]; ++t) inv[len - 1 - r] *= primes[i];
  return inv;
}

}  // namespace

std::string GroupFingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " abelian=" << (abelian ? "yes" : "no") << " center=" << center_order
     << " derived=" << derived_order << " orders={";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "} ab=[";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i)
    os << (i ? "," : "") << abelian_invariants[i];
  os << "]";
  return os.str();
}

GroupFingerprint fingerprint(const AbstractGroup& g) {
  GroupFingerprint f;
  f.order = static_cast<std::size_t>(g.size());
  for (int x = 0; x < g.size(); ++x) ++f.order_histogram[g.element_order(x)];
  f.abelian = g.is_abelian();
  f.center_order = f.abelian ? f.order : g.center().size();
  const Subset derived = f.abelian ? Subset{0} : g.derived_subgroup();
  f.derived_order = derived.size();
  f.abelian_invariants = abelian_invariants_of(f.abelian ? g : g.quotient(derived));
  return f;
}

bool isomorphic(const AbstractGroup& a, const AbstractGroup& b) {
  if (fingerprint(a) != fingerprint(b)) return false;
  const int n = a.size();
  const std::vector<int> gens = a.generating_set();
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> c;
    const int o = a.element_order(g);
    for (int y = 0; y < n; ++y)
      if (b.element_order(y) == o) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<int> images(gens.size());
  // try to extend the assignment gens -> images along the Cayley graph
  auto extends = [&]() {
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int xg = a.mul(x, gens[i]);
        const int img = b.mul(phi[x], images[i]);
        if (phi[xg] < 0) {
          if (used[img]) return false;
          phi[xg] = img;
          used[img] = 1;
          queue.push_back(xg);
        } else if (phi[xg] != img) {
          return false;
        }
      }
    }
    return static_cast<int>(queue.size()) == n;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == gens.size()) return extends();
    for (int y : candidates[k]) {
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

std::int64_t sylow_count(const AbstractGroup& g, std::int64_t p) {
  const std::int64_t n = g.size();
  if (p < 2 || !nt::is_prime(p) || n % p != 0)
    raise(Errc::PrimeDoesNotDivide, std::to_string(p) + " does not divide " + std::to_string(n));
  std::int64_t pk = 1;
  while (n % (pk * p) == 0) pk *= p;
  Subset h{0};
  while (static_cast<std::int64_t>(h.size()) < pk) {
    const Subset norm = g.normalizer(h);
    bool grown = false;
    for (int x : norm) {
      if (contains_sorted(h, x)) continue;
      int t = 1, y = x;
      while (!contains_sorted(h, y)) {
        y = g.mul(y, x);
        ++t;
      }
      if (t % p != 0) continue;
      const int step = g.power(x, t / p);
      std::vector<int> gens = g.generating_set(h);
      gens.push_back(step);
      h = g.generated(gens);
      grown = true;
      break;
    }
    if (!grown) raise(Errc::InvalidArgument, "Sylow construction failed");
  }
  return n / static_cast<std::int64_t>(g.normalizer(h).size());
}

// ---------------------------------------------------------------------------
// ProjGroup

ProjGroup::ProjGroup() : elems_{ProjMat()} { build_index(); }

void ProjGroup::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
}

ProjGroup ProjGroup::closure(const std::vector<ProjMat>& gens) {
  return closure(gens, group_order_ceiling());
}

ProjGroup ProjGroup::closure(const std::vector<ProjMat>& gens, std::size_t ceiling) {
  ProjGroup g;
  auto [elems, table] = close_under<ProjMat, ProjMatHash>(
      ProjMat(), gens, [](const ProjMat& a, const ProjMat& b) { return a * b; }, ceiling);
  g.gens_ = gens;
  g.elems_ = std::move(elems);
  g.table_ = std::move(table);
  g.build_index();
  return g;
}

std::optional<int> ProjGroup::index_of(const ProjMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ProjGroup::require_index(const ProjMat& m) const {
  auto i = index_of(m);
  if (!i) raise(Errc::NotAMember, "matrix " + m.str() + " is not in the group");
  return *i;
}

Subset ProjGroup::indices_of(const ProjGroup& h) const {
  Subset out;
  for (const ProjMat& m : h.elements()) {
    auto i = index_of(m);
    if (!i) raise(Errc::NotASubgroup, "element " + m.str() + " is not in the ambient group");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjGroup ProjGroup::subgroup(const Subset& h) const {
  ProjGroup s;
  std::vector<int> map;
  s.table_ = table_.subgroup(h, &map);
  s.elems_.clear();
  for (int i : map) s.elems_.push_back(elems_[i]);
  for (int i : table_.generating_set(h)) s.gens_.push_back(elems_[i]);
  s.build_index();
  return s;
}

ProjGroup ProjGroup::conjugate(const ProjMat& h) const {
  ProjGroup c;
  const ProjMat hi = h.inverse();
  c.table_ = table_;
  c.elems_.clear();
  for (const ProjMat& m : elems_) c.elems_.push_back(h * m * hi);
  for (const ProjMat& m : gens_) c.gens_.push_back(h * m * hi);
  c.build_index();
  return c;
}

ProjGroup ProjGroup::galois(std::int64_t k) const {
  ProjGroup c;
  c.table_ = table_;
  c.elems_.clear();
  for (const ProjMat& m : elems_) c.elems_.push_back(m.galois(k));
  for (const ProjMat& m : gens_) c.gens_.push_back(m.galois(k));
  c.build_index();
  return c;
}

std::uint32_t ProjGroup::conductor() const {
  std::uint32_t c = 1;
  for (const ProjMat& m : gens_) c = common_conductor(c, m.conductor());
  return c;
}

std::string ProjGroup::to_json() const {
  nlohmann::json j;
  j["conductor"] = conductor();
  j["generators"] = nlohmann::json::array();
  for (const ProjMat& m : gens_) j["generators"].push_back(m.str());
  return j.dump();
}

namespace {

CycNum scalar_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return CycNum(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  raise(Errc::ParseError, "matrix entries must be integers or scalar strings");
}

Mat3 matrix_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_matrix(v.get<std::string>());
  if (!v.is_array() || v.size() != 3) raise(Errc::ParseError, "matrix must have 3 rows");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_array() || v[i].size() != 3) raise(Errc::ParseError, "matrix rows must have 3 entries");
    for (int j = 0; j < 3; ++j) m[i][j] = scalar_from_json(v[i][j]);
  }
  return m;
}

}  // namespace

ProjGroup ProjGroup::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    raise(Errc::ParseError, "group file needs a generators array");
  std::uint32_t declared = 0;
  if (j.contains("conductor")) {
    if (!j["conductor"].is_number_unsigned() || j["conductor"].get<std::int64_t>() < 1)
      raise(Errc::ParseError, "conductor must be a positive integer");
    declared = j["conductor"].get<std::uint32_t>();
  }
  std::vector<ProjMat> gens;
  for (const auto& g : j["generators"]) {
    const Mat3 m = matrix_from_json(g);
    if (declared != 0 && declared % la::conductor(m) != 0)
      raise(Errc::ParseError, "generator lies outside Q(zeta_" + std::to_string(declared) + ")");
    gens.emplace_back(m);
  }
  return closure(gens);
}

// ---------------------------------------------------------------------------
// structural queries on matrix groups

ProjGroup centralizer(const ProjGroup& g, const ProjMat& x) {
  return g.subgroup(g.abstract().centralizer(g.require_index(x)));
}

ProjGroup center(const ProjGroup& g) { return g.subgroup(g.abstract().center()); }

bool is_abelian(const ProjGroup& g) { return g.abstract().is_abelian(); }

ProjGroup normalizer_in(const ProjGroup& g, const ProjGroup& h) {
  const Subset hs = g.indices_of(h);
  if (!g.abstract().is_subgroup(hs)) raise(Errc::NotASubgroup, "not a subgroup");
  return g.subgroup(g.abstract().normalizer(hs));
}

bool is_normal_in(const ProjGroup& g, const ProjGroup& h) {
  return g.abstract().is_normal(g.indices_of(h));
}

std::int64_t sylow_count(const ProjGroup& g, std::int64_t p) { return sylow_count(g.abstract(), p); }

GroupFingerprint fingerprint(const ProjGroup& g) { return fingerprint(g.abstract()); }

const AbstractGroup& to_abstract(const ProjGroup& g) { return g.abstract(); }

AbstractGroup quotient(const ProjGroup& g, const ProjGroup& h) {
  return g.abstract().quotient(g.indices_of(h));
}

std::vector<ProjPoint> orbit(const ProjGroup& g, const ProjPoint& p) {
  std::vector<ProjPoint> out{p};
  std::unordered_map<ProjPoint, int, ProjPointHash> seen{{p, 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const ProjMat& s : g.generators()) {
      ProjPoint q = apply(s, out[i]);
      if (seen.emplace(q, static_cast<int>(out.size())).second) out.push_back(q);
    }
  return out;
}

ProjGroup stabilizer(const ProjGroup& g, const ProjPoint& p) {
  Subset s;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (apply(g.elements()[i], p) == p) s.push_back(static_cast<int>(i));
  return g.subgroup(s);
}

// ---------------------------------------------------------------------------
// reference groups

namespace reference {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};

struct Mat2Hash {
  std::size_t operator()(const std::array<int, 4>& m) const noexcept {
    return static_cast<std::size_t>(((m[0] * 31 + m[1]) * 31 + m[2]) * 31 + m[3]);
  }
};

}  // namespace

AbstractGroup trivial() { return AbstractGroup(); }

AbstractGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return AbstractGroup::trusted(std::move(t));
}

AbstractGroup abelian(const std::vector<int>& factors) {
  AbstractGroup g;
  for (int f : factors) g = direct_product(g, cyclic(f));
  return g;
}

AbstractGroup from_permutations(const std::vector<std::vector<int>>& gens) {
  const std::size_t k = gens.empty() ? 1 : gens[0].size();
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    // apply a, then b
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  return close_under<std::vector<int>, PermHash>(id, gens, compose, 1u << 20).second;
}

AbstractGroup matrix_group_mod(int p, const std::vector<std::array<int, 4>>& gens) {
  auto mul = [p](const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return std::array<int, 4>{(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
                              (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
  };
  std::vector<std::array<int, 4>> reduced;
  for (auto m : gens) {
    for (int& x : m) x = static_cast<int>(nt::mod(x, p));
    reduced.push_back(m);
  }
  return close_under<std::array<int, 4>, Mat2Hash>({1, 0, 0, 1}, reduced, mul, 1u << 20).second;
}

AbstractGroup dihedral(int n) {
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = static_cast<int>(nt::mod(-i, n));
  }
  if (n == 1) return cyclic(2);
  if (n == 2) return klein();
  return from_permutations({rot, ref});
}

AbstractGroup symmetric3() { return dihedral(3); }

AbstractGroup klein() { return abelian({2, 2}); }

AbstractGroup quaternion() { return matrix_group_mod(3, {{0, 2, 1, 0}, {1, 1, 1, 2}}); }

AbstractGroup alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

AbstractGroup sl2_3() { return matrix_group_mod(3, {{0, 2, 1, 0}, {1, 1, 1, 2}, {1, 1, 0, 1}}); }

AbstractGroup c3sq_semidirect(const std::array<int, 4>& matrix) {
  // affine maps of F_3^2 acting on its 9 points
  auto point = [](int x, int y) { return 3 * x + y; };
  std::vector<int> tx(9), ty(9), lin(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      tx[point(x, y)] = point((x + 1) % 3, y);
      ty[point(x, y)] = point(x, (y + 1) % 3);
      const int nx = static_cast<int>(nt::mod(matrix[0] * x + matrix[1] * y, 3));
      const int ny = static_cast<int>(nt::mod(matrix[2] * x + matrix[3] * y, 3));
      lin[point(x, y)] = point(nx, ny);
    }
  return from_permutations({tx, ty, lin});
}

AbstractGroup c3sq_c2() { return c3sq_semidirect({2, 0, 0, 2}); }

AbstractGroup c3sq_c4() { return c3sq_semidirect({0, 2, 1, 0}); }

}  // namespace reference
}  // namespace planemod
