#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "planemod/error.hpp"
#include "planemod/projgeom.hpp"

namespace planemod {

inline constexpr std::size_t kDefaultGroupOrderCeiling = 1000;
std::size_t group_order_ceiling() noexcept;
void set_group_order_ceiling(std::size_t ceiling) noexcept;

/// Subsets of a group are sorted vectors of element indices.
using Subset = std::vector<int>;

/// A finite group as a multiplication table on 0..n-1 with 0 the identity.
class AbstractGroup {
 public:
  AbstractGroup();  // trivial group
  /// Validates identity, Latin-square property and associativity.
  static AbstractGroup from_table(std::vector<std::vector<int>> table);
  /// Skips the associativity check; for tables produced by closure.
  static AbstractGroup trusted(std::vector<std::vector<int>> table);

  int size() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  int element_order(int a) const;
  int power(int a, std::int64_t e) const;
  bool is_abelian() const;

  Subset all() const;
  Subset generated(const std::vector<int>& gens) const;
  bool is_subgroup(const Subset& h) const;
  bool is_normal(const Subset& h) const;
  Subset centralizer(int g) const;
  Subset center() const;
  Subset normalizer(const Subset& h) const;
  Subset conjugate(const Subset& h, int g) const;
  Subset derived_subgroup() const;
  /// Elements of the same order, greedily chosen so they generate the group.
  std::vector<int> generating_set() const;
  std::vector<int> generating_set(const Subset& h) const;

  /// Restriction to a subgroup, re-indexed in the subset's order (identity
  /// first). `index_map` receives the parent index of each new index.
  AbstractGroup subgroup(const Subset& h, std::vector<int>* index_map = nullptr) const;
  /// G/H with cosets ordered by least element; `projection` receives the
  /// coset index of every element. Raises NotNormal.
  AbstractGroup quotient(const Subset& h, std::vector<int>* projection = nullptr) const;

  std::string to_json() const;
  static AbstractGroup from_json(const std::string& text);

 private:
  explicit AbstractGroup(std::vector<std::vector<int>> table);
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

/// Direct product with (a, b) at index a * |B| + b.
AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b);

struct GroupFingerprint {
  std::size_t order = 1;
  std::map<int, int> order_histogram;  // element order -> count
  bool abelian = true;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
  /// Invariant factors of the abelianization, ascending, each dividing the
  /// next; for abelian groups these are the invariants of the group itself.
  std::vector<std::int64_t> abelian_invariants;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
  std::string str() const;
};

GroupFingerprint fingerprint(const AbstractGroup& g);
bool isomorphic(const AbstractGroup& a, const AbstractGroup& b);
/// Number of Sylow p-subgroups. Raises PrimeDoesNotDivide.
std::int64_t sylow_count(const AbstractGroup& g, std::int64_t p);

/// Breadth-first closure of `gens` under right multiplication. Elements are
/// indexed in discovery order with the identity at 0.
template <class T, class Hash, class Mul>
std::pair<std::vector<T>, AbstractGroup> close_under(const T& identity, const std::vector<T>& gens,
                                                     Mul mul, std::size_t ceiling) {
  std::vector<T> elems{identity};
  std::unordered_map<T, int, Hash> index{{identity, 0}};
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right;  // right[i][g] = index of elems[i] * gens[g]
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<int> row(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T prod = mul(elems[i], gens[g]);
      auto it = index.find(prod);
      if (it == index.end()) {
        if (elems.size() >= ceiling)
          raise(Errc::OrderCeilingExceeded,
                "group order exceeds ceiling " + std::to_string(ceiling));
        it = index.emplace(prod, static_cast<int>(elems.size())).first;
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(g));
      }
      row[g] = it->second;
    }
    right.push_back(std::move(row));
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    table[i][0] = static_cast<int>(i);
    // elements are discovered after their parents, so columns fill in order
    for (std::size_t j = 1; j < n; ++j) table[i][j] = right[table[i][parent[j]]][via[j]];
  }
  return {std::move(elems), AbstractGroup::trusted(std::move(table))};
}

/// A finite subgroup of PGL_3 with all elements materialized.
class ProjGroup {
 public:
  ProjGroup();  // trivial group
  /// Raises OrderCeilingExceeded when the closure grows past the ceiling.
  static ProjGroup closure(const std::vector<ProjMat>& gens);
  static ProjGroup closure(const std::vector<ProjMat>& gens, std::size_t ceiling);

  const std::vector<ProjMat>& generators() const noexcept { return gens_; }
  const std::vector<ProjMat>& elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const AbstractGroup& abstract() const noexcept { return table_; }
  std::optional<int> index_of(const ProjMat& m) const;
  bool contains(const ProjMat& m) const { return index_of(m).has_value(); }
  /// Index lookup that raises NotAMember.
  int require_index(const ProjMat& m) const;
  Subset indices_of(const ProjGroup& h) const;  // raises NotASubgroup

  /// The subgroup on a subset of indices (which must form a subgroup).
  ProjGroup subgroup(const Subset& h) const;
  /// h G h^{-1}, with the same element indexing.
  ProjGroup conjugate(const ProjMat& h) const;
  /// Entrywise Galois conjugate sigma_k(G), same indexing.
  ProjGroup galois(std::int64_t k) const;
  std::uint32_t conductor() const;

  std::string to_json() const;
  static ProjGroup from_json(const std::string& text);

 private:
  void build_index();
  std::vector<ProjMat> gens_;
  std::vector<ProjMat> elems_;
  AbstractGroup table_;
  std::unordered_map<ProjMat, int, ProjMatHash> index_;
};

ProjGroup centralizer(const ProjGroup& g, const ProjMat& x);  // raises NotAMember
ProjGroup center(const ProjGroup& g);
bool is_abelian(const ProjGroup& g);
ProjGroup normalizer_in(const ProjGroup& g, const ProjGroup& h);  // raises NotASubgroup
bool is_normal_in(const ProjGroup& g, const ProjGroup& h);
std::int64_t sylow_count(const ProjGroup& g, std::int64_t p);
GroupFingerprint fingerprint(const ProjGroup& g);
const AbstractGroup& to_abstract(const ProjGroup& g);
AbstractGroup quotient(const ProjGroup& g, const ProjGroup& h);  // raises NotNormal

std::vector<ProjPoint> orbit(const ProjGroup& g, const ProjPoint& p);
ProjGroup stabilizer(const ProjGroup& g, const ProjPoint& p);

/// Standard small groups used as isomorphism references.
namespace reference {
AbstractGroup trivial();
AbstractGroup cyclic(int n);
AbstractGroup abelian(const std::vector<int>& factors);
AbstractGroup dihedral(int n);  // order 2n
AbstractGroup symmetric3();
AbstractGroup klein();
AbstractGroup quaternion();
AbstractGroup alternating4();
AbstractGroup sl2_3();
/// F_3^2 extended by the cyclic group generated by a 2x2 matrix over F_3.
AbstractGroup c3sq_semidirect(const std::array<int, 4>& matrix);
/// C3^2 : C2 with C2 acting as -1.
AbstractGroup c3sq_c2();
/// C3^2 : C4 with C4 acting as (0 -1; 1 0).
AbstractGroup c3sq_c4();
/// Permutation group generated by the given permutations of 0..k-1.
AbstractGroup from_permutations(const std::vector<std::vector<int>>& gens);
/// Finite group of 2x2 matrices over F_p generated by the given (row-major).
AbstractGroup matrix_group_mod(int p, const std::vector<std::array<int, 4>>& gens);
}  // namespace reference

}  // namespace planemod
