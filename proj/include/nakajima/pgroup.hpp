#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nakajima/error.hpp"
#include "nakajima/tower.hpp"

namespace nakajima {

// Permutation of {0, ..., n-1} as its image list.
using Perm = std::vector<int>;

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5 6)"; "()" is the
// identity. degree 0 means the largest point mentioned.
Perm perm_parse(const std::string& cycles, int degree = 0);
std::string perm_to_string(const Perm& p);

enum class Origin { FromMaps, FromPermutations, FromConstruction };

std::string origin_name(Origin o);

// A fully enumerated finite group given by its multiplication table.
// Element 0 is the identity. For groups of maps and permutations the product
// a*b is composition "b first, then a".
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 4096;

  FiniteGroup() = default;

  // table[a * n + b] = a*b. Checks identity and inverses, not associativity.
  static FiniteGroup from_table(int n, std::vector<std::uint16_t> table, std::vector<int> gens, Origin origin,
                                std::string label = {});

  int order() const noexcept { return n_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const noexcept { return inv_[a]; }
  int pow(int a, long long e) const;
  int elem_order(int a) const;
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }

  const std::vector<int>& generators() const noexcept { return gens_; }
  Origin origin() const noexcept { return origin_; }
  const std::string& label() const noexcept { return label_; }
  FiniteGroup& relabel(std::string l) {
    label_ = std::move(l);
    return *this;
  }

  // Spanning tree of the Cayley graph: e = parent(e) * generators()[parent_gen(e)].
  int parent(int e) const { return parent_[e]; }
  int parent_gen(int e) const { return parent_gen_[e]; }

  // Indices in the group this one was cut out of (empty if none).
  const std::vector<int>& embedding() const noexcept { return embedding_; }

 private:
  friend FiniteGroup subgroup(const FiniteGroup& G, const std::vector<int>& elems, std::string label);
  void index_words();

  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<int> parent_, parent_gen_;
  std::vector<int> embedding_;
  Origin origin_ = Origin::FromConstruction;
  std::string label_;
};

template <class T>
struct ClosureResult {
  FiniteGroup group;
  std::vector<T> elements;  // elements[i] is group element i
  std::optional<int> find(const T& x) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == x) return static_cast<int>(i);
    return std::nullopt;
  }
};

// Enumerates <gens> by breadth-first right multiplication, then fills the
// table from the Cayley graph. mul(a, b) must be associative with identity id.
template <class T, class Mul, class Hash = std::hash<T>>
ClosureResult<T> closure(const std::vector<T>& gens, const T& id, Mul mul, int cap, Origin origin,
                         std::string label = {}) {
  if (cap < 1) fail(Errc::BadParameter, "closure cap must be positive");
  const int limit = std::min(cap, FiniteGroup::kMaxOrder);
  ClosureResult<T> res;
  std::unordered_map<T, int, Hash> index;
  res.elements.push_back(id);
  index.emplace(id, 0);
  std::vector<std::vector<int>> cay;  // cay[e][j] = e * gens[j]
  for (std::size_t e = 0; e < res.elements.size(); ++e) {
    std::vector<int> row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      T x = mul(res.elements[e], gens[j]);
      auto it = index.find(x);
      if (it == index.end()) {
        if (static_cast<int>(res.elements.size()) >= limit)
          fail(Errc::CapExceeded, "closure exceeds " + std::to_string(limit) + " elements");
        it = index.emplace(x, static_cast<int>(res.elements.size())).first;
        res.elements.push_back(std::move(x));
      }
      row[j] = it->second;
    }
    cay.push_back(std::move(row));
  }
  const int n = static_cast<int>(res.elements.size());
  // Breadth-first tree: element e (e > 0) was first reached as parent * gens[pg].
  std::vector<int> parent(n, -1), pg(n, -1), bfs{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int t = cay[bfs[i]][j];
      if (parent[t] < 0) {
        parent[t] = bfs[i];
        pg[t] = static_cast<int>(j);
        bfs.push_back(t);
      }
    }
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto* row = &table[static_cast<std::size_t>(a) * n];
    row[0] = static_cast<std::uint16_t>(a);
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const int b = bfs[i];
      row[b] = static_cast<std::uint16_t>(cay[row[parent[b]]][pg[b]]);
    }
  }
  // generator j is element cay[0][j]
  std::vector<int> gidx;
  for (std::size_t j = 0; j < gens.size(); ++j) gidx.push_back(cay[0][j]);
  res.group = FiniteGroup::from_table(n, std::move(table), std::move(gidx), origin, std::move(label));
  return res;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
    return h;
  }
};

// Groups of verified substitution maps under point composition.
ClosureResult<FieldAuto> closure_maps(const std::vector<FieldAuto>& gens, int cap = 1024, std::string label = {});
ClosureResult<Perm> closure_perms(const std::vector<Perm>& gens, int cap = FiniteGroup::kMaxOrder,
                                  std::string label = {});
// Square matrices (row-major) over Z/modulus.
ClosureResult<std::vector<int>> closure_matrices(const std::vector<std::vector<int>>& gens, int modulus,
                                                 int cap = FiniteGroup::kMaxOrder, std::string label = {});

// ---- subgroups, as sorted lists of element indices

std::vector<int> generate(const FiniteGroup& G, const std::vector<int>& gens);
std::vector<int> all_elements(const FiniteGroup& G);
std::vector<int> center(const FiniteGroup& G);
std::vector<int> commutator_subgroup(const FiniteGroup& G, const std::vector<int>& A, const std::vector<int>& B);
std::vector<int> derived_subgroup(const FiniteGroup& G);
// G' G^p; p is the prime dividing |G|.
std::vector<int> frattini(const FiniteGroup& G);
// gamma_1 = G, gamma_{i+1} = [gamma_i, G], down to the first repeat.
std::vector<std::vector<int>> lower_central_series(const FiniteGroup& G);
// Generators are chosen greedily (group generators first).
FiniteGroup subgroup(const FiniteGroup& G, const std::vector<int>& elems, std::string label = {});
bool is_normal(const FiniteGroup& G, const std::vector<int>& H);

// Prime p with |G| = p^n, or 0 when |G| is not a prime power (or 1).
int prime_of(const FiniteGroup& G);

struct Fingerprint {
  int order = 1;
  int exponent = 1;
  int nilpotency_class = 0;  // -1 when not nilpotent
  int center_order = 1;
  int derived_order = 1;
  int frattini_order = 1;
  int d = 0;                                 // log_p [G : Phi]
  std::map<int, int> census;                 // element order -> count
  std::vector<long long> abelian_invariants;  // of G/G', ascending
  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const FiniteGroup& G);

// Minimal generating set (a basis of G/Phi lifted to G).
std::vector<int> minimal_generating_set(const FiniteGroup& G);

// Index-p normal subgroups: preimages of the hyperplanes of G/Phi.
std::vector<std::vector<int>> maximal_subgroups(const FiniteGroup& G);

// An isomorphism G -> H as an image table, if one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);
bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H);
// |Aut(G)| by enumerating images of a minimal generating set.
std::uint64_t count_automorphisms(const FiniteGroup& G);

// Words over named generators: juxtaposition, ^n (n may be negative),
// parentheses, commutators [u,v] = u^-1 v^-1 u v, and "1". A relator
// "lhs=rhs" stands for lhs rhs^-1.
int eval_word(const FiniteGroup& G, const std::string& word, const std::vector<std::string>& names,
              const std::vector<int>& images);

// True iff every relator maps to 1 and the images generate G.
bool presentation_check(const FiniteGroup& G, const std::vector<std::string>& names,
                        const std::vector<std::string>& relators, const std::vector<int>& images);

// Permutation of each element under the left action determined by the
// generator permutations: act(a*b) = act(a) o act(b).
std::vector<Perm> element_actions(const FiniteGroup& G, const std::vector<Perm>& gen_perms);
// Left action on the left cosets of H.
std::vector<Perm> coset_action(const FiniteGroup& G, const std::vector<int>& H);

struct ActionSummary {
  std::vector<int> fixed_points;  // per element
  // Every non-identity element of the subgroup is fixed-point free.
  bool semiregular(const std::vector<int>& subgroup) const;
};

ActionSummary semiregular_on(const FiniteGroup& G, const std::vector<Perm>& elem_perms);

// ---- reference constructions

FiniteGroup cyclic_group(int n);
FiniteGroup abelian_group(const std::vector<int>& orders);
FiniteGroup ut3(int p);
// C_p wr C_p on p^2 points, generated by (1 .. p) and the block shift.
FiniteGroup wreath_cp_cp(int p);

// A semidirect product A x| <c> with A = Z/n_1 x ... x Z/n_r, c of order m
// acting by c a_i c^-1 = theta(a_i); theta is given by the images of the
// basis vectors (theta[i] = exponent vector of theta(a_i)). Generators are
// a_1..a_r, c.
FiniteGroup split_extension(const std::vector<int>& orders, const std::vector<std::vector<int>>& theta, int m,
                            std::string label = {});

struct ReferencePresentation {
  std::string label;
  std::vector<std::string> names;
  std::vector<std::string> relators;
  std::vector<int> orders;
  std::vector<std::vector<int>> theta;
  int top = 0;
};

// <a,b,c | a^9=b^3=c^3=1, ab=ba, cac^-1=ab^-1, cbc^-1=a^3b> and the S(81,8)
// variant with cac^-1 = ab.
ReferencePresentation s81_9_presentation();
ReferencePresentation s81_8_presentation();
// Builds the split extension and validates the relators; throws InvalidInput
// if they do not hold.
FiniteGroup build_presentation(const ReferencePresentation& P);

}  // namespace nakajima
