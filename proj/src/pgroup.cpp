#include "nakajima/pgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace nakajima {

// ---------------------------------------------------------------- perms

Perm perm_parse(const std::string& cycles, int degree) {
  std::vector<std::vector<int>> cs;
  int maxp = 0;
  std::size_t i = 0;
  auto bad = [&](const std::string& what) {
    fail(Errc::ParseError, what + " in permutation \"" + cycles + "\"");
  };
  while (i < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
      ++i;
      continue;
    }
    if (cycles[i] != '(') bad("expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      while (i < cycles.size() && (std::isspace(static_cast<unsigned char>(cycles[i])) || cycles[i] == ',')) ++i;
      if (i >= cycles.size()) bad("unterminated cycle");
      if (cycles[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[i]))) bad("expected a point");
      int v = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        v = v * 10 + (cycles[i++] - '0');
        if (v > 100000) bad("point too large");
      }
      if (v < 1) bad("points are numbered from 1");
      cyc.push_back(v - 1);
      maxp = std::max(maxp, v);
    }
    cs.push_back(std::move(cyc));
  }
  if (degree == 0) degree = maxp;
  if (maxp > degree) bad("point beyond the degree");
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> seen(degree, 0);
  for (const auto& c : cs)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (seen[c[k]]) bad("point repeated");
      seen[c[k]] = 1;
      p[c[k]] = c[(k + 1) % c.size()];
    }
  return p;
}

std::string perm_to_string(const Perm& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (s.back() != '(') s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::FromMaps: return "from-maps";
    case Origin::FromPermutations: return "from-permutations";
    case Origin::FromConstruction: return "from-construction";
  }
  return "unknown";
}

// ---------------------------------------------------------------- group

FiniteGroup FiniteGroup::from_table(int n, std::vector<std::uint16_t> table, std::vector<int> gens, Origin origin,
                                    std::string label) {
  if (n < 1 || n > kMaxOrder) fail(Errc::OrderTooLarge, "group order must lie in 1.." + std::to_string(kMaxOrder));
  if (table.size() != static_cast<std::size_t>(n) * n) fail(Errc::InvalidInput, "table size does not match order");
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  G.gens_ = std::move(gens);
  G.origin_ = origin;
  G.label_ = std::move(label);
  G.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (G.mul(0, a) != a || G.mul(a, 0) != a) fail(Errc::InvalidInput, "element 0 is not the identity");
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == 0) {
        G.inv_[a] = b;
        break;
      }
    if (G.inv_[a] < 0) fail(Errc::InvalidInput, "element without inverse");
  }
  for (int g : G.gens_)
    if (g < 0 || g >= n) fail(Errc::InvalidInput, "generator index out of range");
  G.index_words();
  return G;
}

void FiniteGroup::index_words() {
  parent_.assign(n_, -1);
  parent_gen_.assign(n_, -1);
  parent_[0] = 0;
  std::vector<int> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      const int t = mul(bfs[i], gens_[j]);
      if (parent_[t] < 0) {
        parent_[t] = bfs[i];
        parent_gen_[t] = static_cast<int>(j);
        bfs.push_back(t);
      }
    }
  if (static_cast<int>(bfs.size()) != n_) fail(Errc::InvalidInput, "generators do not generate the group");
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::elem_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------- closures

ClosureResult<FieldAuto> closure_maps(const std::vector<FieldAuto>& gens, int cap, std::string label) {
  if (gens.empty()) fail(Errc::InvalidInput, "closure of maps needs at least one generator to fix the tower");
  for (const auto& g : gens)
    if (!g.verified()) fail(Errc::UnverifiedGenerator, "generator " + g.name() + " has not passed map_verify");
  const FieldAuto id = FieldAuto::identity(gens.front().tower());
  return closure<FieldAuto>(
      gens, id, [](const FieldAuto& a, const FieldAuto& b) { return point_compose(a, b); }, cap, Origin::FromMaps,
      std::move(label));
}

ClosureResult<Perm> closure_perms(const std::vector<Perm>& gens, int cap, std::string label) {
  std::size_t deg = 0;
  for (const auto& g : gens) deg = std::max(deg, g.size());
  std::vector<Perm> gs;
  for (auto g : gens) {
    std::vector<char> seen(g.size(), 0);
    for (int v : g) {
      if (v < 0 || v >= static_cast<int>(g.size()) || seen[v]) fail(Errc::InvalidInput, "not a permutation");
      seen[v] = 1;
    }
    for (std::size_t i = g.size(); i < deg; ++i) g.push_back(static_cast<int>(i));
    gs.push_back(std::move(g));
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  return closure<Perm, std::function<Perm(const Perm&, const Perm&)>, VecHash>(
      gs, id,
      [](const Perm& a, const Perm& b) {
        Perm r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
        return r;
      },
      cap, Origin::FromPermutations, std::move(label));
}

ClosureResult<std::vector<int>> closure_matrices(const std::vector<std::vector<int>>& gens, int modulus, int cap,
                                                 std::string label) {
  if (gens.empty()) fail(Errc::InvalidInput, "need at least one matrix");
  const std::size_t sz = gens.front().size();
  int n = 0;
  while (static_cast<std::size_t>(n * n) < sz) ++n;
  if (static_cast<std::size_t>(n * n) != sz) fail(Errc::InvalidInput, "matrix entry count is not a square");
  std::vector<std::vector<int>> gs;
  for (auto g : gens) {
    if (g.size() != sz) fail(Errc::InvalidInput, "matrices of different sizes");
    for (auto& v : g) v = ((v % modulus) + modulus) % modulus;
    gs.push_back(std::move(g));
  }
  std::vector<int> id(sz, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1 % modulus;
  return closure<std::vector<int>, std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>,
                 VecHash>(
      gs, id,
      [n, modulus](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(a.size(), 0);
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) {
            const long long aik = a[i * n + k];
            if (!aik) continue;
            for (int j = 0; j < n; ++j) r[i * n + j] = static_cast<int>((r[i * n + j] + aik * b[k * n + j]) % modulus);
          }
        return r;
      },
      cap, Origin::FromConstruction, std::move(label));
}

// ---------------------------------------------------------------- subgroups

namespace {

std::vector<int> members(const std::vector<char>& in) {
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

// Extends the subgroup marked in `in` (listed in `elems`) by a new generator.
void extend(const FiniteGroup& G, std::vector<char>& in, std::vector<int>& elems, std::vector<int>& gens, int g) {
  gens.push_back(g);
  // Restart the orbit from the current elements using every generator.
  std::vector<int> queue = elems;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int s : gens) {
      const int t = G.mul(queue[i], s);
      if (!in[t]) {
        in[t] = 1;
        elems.push_back(t);
        queue.push_back(t);
      }
    }
}

}  // namespace

std::vector<int> generate(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> elems{0}, gs;
  for (int g : gens)
    if (!in[g]) extend(G, in, elems, gs, g);
  return members(in);
}

std::vector<int> all_elements(const FiniteGroup& G) {
  std::vector<int> v(G.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> center(const FiniteGroup& G) {
  std::vector<int> z;
  for (int a = 0; a < G.order(); ++a) {
    bool central = true;
    for (int g : G.generators())
      if (G.mul(a, g) != G.mul(g, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> commutator_subgroup(const FiniteGroup& G, const std::vector<int>& A, const std::vector<int>& B) {
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> elems{0}, gens;
  for (int a : A)
    for (int b : B) {
      const int c = G.commutator(a, b);
      if (!in[c]) extend(G, in, elems, gens, c);
    }
  return members(in);
}

std::vector<int> derived_subgroup(const FiniteGroup& G) {
  const auto all = all_elements(G);
  return commutator_subgroup(G, all, all);
}

int prime_of(const FiniteGroup& G) {
  int n = G.order();
  if (n < 2) return 0;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

std::vector<int> frattini(const FiniteGroup& G) {
  const int p = prime_of(G);
  if (p == 0) {
    if (G.order() == 1) return {0};
    fail(Errc::InvalidInput, "Frattini subgroup is computed for p-groups only");
  }
  std::vector<int> gens = derived_subgroup(G);
  for (int g = 0; g < G.order(); ++g) gens.push_back(G.pow(g, p));
  return generate(G, gens);
}

std::vector<std::vector<int>> lower_central_series(const FiniteGroup& G) {
  std::vector<std::vector<int>> series{all_elements(G)};
  const auto all = series.front();
  for (;;) {
    auto next = commutator_subgroup(G, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

FiniteGroup subgroup(const FiniteGroup& G, const std::vector<int>& elems, std::string label) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != 0) fail(Errc::InvalidInput, "subgroup must contain the identity");
  const int n = static_cast<int>(sorted.size());
  std::vector<int> local(G.order(), -1);
  for (int i = 0; i < n; ++i) local[sorted[i]] = i;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = local[G.mul(sorted[i], sorted[j])];
      if (t < 0) fail(Errc::InvalidInput, "element set is not closed under multiplication");
      table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(t);
    }
  // greedy generators, preferring the parent's generators
  std::vector<int> cand;
  for (int g : G.generators())
    if (local[g] >= 0) cand.push_back(g);
  for (int e : sorted) cand.push_back(e);
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<int> cur{0}, gens;
  for (int c : cand)
    if (!in[c]) extend(G, in, cur, gens, c);
  std::vector<int> lg;
  for (int g : gens) lg.push_back(local[g]);
  FiniteGroup H = FiniteGroup::from_table(n, std::move(table), std::move(lg), G.origin(), std::move(label));
  H.embedding_ = sorted;
  return H;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& H) {
  std::vector<char> in(G.order(), 0);
  for (int h : H) in[h] = 1;
  for (int h : H)
    for (int g : G.generators())
      if (!in[G.conj(h, g)]) return false;
  return true;
}

// ---------------------------------------------------------------- invariants

std::string Fingerprint::to_string() const {
  std::string s = "order=" + std::to_string(order) + " exponent=" + std::to_string(exponent) +
                  " class=" + std::to_string(nilpotency_class) + " |Z|=" + std::to_string(center_order) +
                  " |G'|=" + std::to_string(derived_order) + " |Phi|=" + std::to_string(frattini_order) +
                  " d=" + std::to_string(d) + " census={";
  bool first = true;
  for (const auto& [o, c] : census) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "} abelianization=[";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i)
    s += (i ? "," : "") + std::to_string(abelian_invariants[i]);
  return s + "]";
}

Fingerprint fingerprint(const FiniteGroup& G) {
  Fingerprint f;
  f.order = G.order();
  for (int a = 0; a < G.order(); ++a) {
    const int o = G.elem_order(a);
    ++f.census[o];
    f.exponent = std::lcm(f.exponent, o);
  }
  const auto series = lower_central_series(G);
  f.nilpotency_class = series.back().size() == 1 ? static_cast<int>(series.size()) - 1 : -1;
  f.center_order = static_cast<int>(center(G).size());
  const auto der = derived_subgroup(G);
  f.derived_order = static_cast<int>(der.size());
  const int p = prime_of(G);
  if (p == 0) {
    f.frattini_order = G.order() == 1 ? 1 : 0;
    f.d = G.order() == 1 ? 0 : -1;
    return f;
  }
  f.frattini_order = static_cast<int>(frattini(G).size());
  for (int idx = G.order() / f.frattini_order; idx > 1; idx /= p) ++f.d;
  // G/G' is an abelian p-group; a_k = #{g : g^(p^k) in G'} / |G'| = p^(sum_i min(e_i, k)).
  std::vector<char> in_der(G.order(), 0);
  for (int x : der) in_der[x] = 1;
  std::vector<int> logs{0};  // log_p a_k
  long long pk = 1;
  const int quotient = G.order() / f.derived_order;
  int qlog = 0;
  for (int q = quotient; q > 1; q /= p) ++qlog;
  for (;;) {
    pk *= p;
    int cnt = 0;
    for (int g = 0; g < G.order(); ++g)
      if (in_der[G.pow(g, pk)]) ++cnt;
    int a = cnt / f.derived_order, l = 0;
    while (a > 1) {
      a /= p;
      ++l;
    }
    logs.push_back(l);
    if (l == qlog) break;
  }
  // r_k = #{i : e_i >= k} = logs[k] - logs[k-1]
  for (std::size_t k = 1; k < logs.size(); ++k) {
    const int rk = logs[k] - logs[k - 1];
    const int rk1 = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
    long long v = 1;
    for (std::size_t i = 0; i < k; ++i) v *= p;
    for (int c = 0; c < rk - rk1; ++c) f.abelian_invariants.push_back(v);
  }
  std::sort(f.abelian_invariants.begin(), f.abelian_invariants.end());
  return f;
}

namespace {

// A basis of G/Phi lifted to G, with the coordinates of every element.
struct FrattiniCoords {
  int p = 0;
  std::vector<int> basis;
  std::vector<std::vector<int>> coord;  // per element, length d
};

FrattiniCoords frattini_coords(const FiniteGroup& G) {
  FrattiniCoords fc;
  fc.p = prime_of(G);
  if (G.order() == 1) {
    fc.coord.assign(1, {});
    return fc;
  }
  if (fc.p == 0) fail(Errc::InvalidInput, "maximal subgroups are computed for p-groups only");
  const auto phi = frattini(G);
  fc.basis = minimal_generating_set(G);
  const int d = static_cast<int>(fc.basis.size());
  // Breadth-first over right multiplication by Phi and by the basis.
  const FiniteGroup P = subgroup(G, phi);
  std::vector<int> phi_gen_elems;
  for (int l : P.generators()) phi_gen_elems.push_back(P.embedding()[l]);
  fc.coord.assign(G.order(), {});
  std::vector<char> seen(G.order(), 0);
  seen[0] = 1;
  fc.coord[0].assign(d, 0);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int e = queue[i];
    auto visit = [&](int t, int j) {
      if (seen[t]) return;
      seen[t] = 1;
      fc.coord[t] = fc.coord[e];
      if (j >= 0) fc.coord[t][j] = (fc.coord[t][j] + 1) % fc.p;
      queue.push_back(t);
    };
    for (int j = 0; j < d; ++j) visit(G.mul(e, fc.basis[j]), j);
    for (int f : phi_gen_elems) visit(G.mul(e, f), -1);
  }
  return fc;
}

}  // namespace

std::vector<int> minimal_generating_set(const FiniteGroup& G) {
  if (G.order() == 1) return {};
  const int p = prime_of(G);
  if (p == 0) fail(Errc::InvalidInput, "minimal generating sets are computed for p-groups only");
  const auto phi = frattini(G);
  std::vector<char> in(G.order(), 0);
  for (int x : phi) in[x] = 1;
  std::vector<int> span = phi, gens = phi, basis;
  std::vector<int> cand = G.generators();
  for (int g = 0; g < G.order(); ++g) cand.push_back(g);
  for (int c : cand)
    if (!in[c]) {
      basis.push_back(c);
      extend(G, in, span, gens, c);
    }
  return basis;
}

std::vector<std::vector<int>> maximal_subgroups(const FiniteGroup& G) {
  if (G.order() == 1) return {};
  const FrattiniCoords fc = frattini_coords(G);
  const int d = static_cast<int>(fc.basis.size());
  const int p = fc.p;
  std::vector<std::vector<int>> out;
  std::vector<int> lambda(d, 0);
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long long idx = 1; idx < total; ++idx) {
    long long v = idx;
    for (int i = d - 1; i >= 0; --i) {
      lambda[i] = static_cast<int>(v % p);
      v /= p;
    }
    int first = 0;
    while (lambda[first] == 0) ++first;
    if (lambda[first] != 1) continue;  // one functional per line
    std::vector<int> M;
    for (int g = 0; g < G.order(); ++g) {
      long long s = 0;
      for (int i = 0; i < d; ++i) s += static_cast<long long>(lambda[i]) * fc.coord[g][i];
      if (s % p == 0) M.push_back(g);
    }
    out.push_back(std::move(M));
  }
  return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

std::vector<std::pair<int, int>> element_invariants(const FiniteGroup& G) {
  std::vector<std::pair<int, int>> inv(G.order());
  for (int a = 0; a < G.order(); ++a) {
    int cent = 0;
    for (int b = 0; b < G.order(); ++b)
      if (G.mul(a, b) == G.mul(b, a)) ++cent;
    inv[a] = {G.elem_order(a), cent};
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& G, const FiniteGroup& H) : G_(G), H_(H), xs_(minimal_generating_set(G)) {
    const auto ig = element_invariants(G), ih = element_invariants(H);
    for (int x : xs_) {
      std::vector<int> c;
      for (int h = 0; h < H.order(); ++h)
        if (ih[h] == ig[x]) c.push_back(h);
      cand_.push_back(std::move(c));
    }
    img_.assign(xs_.size(), 0);
  }

  // Calls visit(phi) for each isomorphism until it returns false.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    if (xs_.empty()) {
      if (G_.order() == 1 && H_.order() == 1) (*visit_)(std::vector<int>{0});
      return;
    }
    descend(0);
  }

 private:
  // Extends x_0..x_j -> img_0..img_j along the Cayley graph of <x_0..x_j>;
  // fails on any inconsistency or collision.
  bool consistent(std::size_t j, std::vector<int>& phi) const {
    phi.assign(G_.order(), -1);
    std::vector<char> used(H_.order(), 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (std::size_t i = 0; i <= j; ++i) {
        const int ge = G_.mul(e, xs_[i]);
        const int he = H_.mul(phi[e], img_[i]);
        if (phi[ge] < 0) {
          if (used[he]) return false;
          used[he] = 1;
          phi[ge] = he;
          queue.push_back(ge);
        } else if (phi[ge] != he) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t j) {
    std::vector<int> phi;
    for (int h : cand_[j]) {
      if (stop_) return;
      img_[j] = h;
      if (!consistent(j, phi)) continue;
      if (j + 1 == xs_.size()) {
        if (!(*visit_)(phi)) stop_ = true;
      } else {
        descend(j + 1);
      }
    }
  }

  const FiniteGroup& G_;
  const FiniteGroup& H_;
  std::vector<int> xs_;
  std::vector<std::vector<int>> cand_;
  std::vector<int> img_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  if (!(fingerprint(G) == fingerprint(H))) return std::nullopt;
  std::optional<std::vector<int>> found;
  IsoSearch(G, H).run([&](const std::vector<int>& phi) {
    found = phi;
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) { return find_isomorphism(G, H).has_value(); }

std::uint64_t count_automorphisms(const FiniteGroup& G) {
  std::uint64_t count = 0;
  IsoSearch(G, G).run([&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------- words

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroup& G, const std::string& s, const std::vector<std::string>& names,
             const std::vector<int>& images)
      : G_(G), s_(s), names_(names), images_(images) {}

  int relator() {
    int lhs = word();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '=') {
      ++pos_;
      const int rhs = word();
      lhs = G_.mul(lhs, G_.inv(rhs));
    }
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return lhs;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in word \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }
  bool at_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }
  int word() {
    int r = 0;
    while (at_factor()) r = G_.mul(r, factor());
    return r;
  }
  int factor() {
    int base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool paren = pos_ < s_.size() && s_[pos_] == '(';
      if (paren) ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected exponent");
      long long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 1000000000) error("exponent too large");
      }
      if (paren) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ')') error("expected ')'");
        ++pos_;
      }
      base = G_.pow(base, neg ? -e : e);
    }
    return base;
  }
  int primary() {
    skip();
    const char c = s_[pos_];
    if (c == '1') {
      ++pos_;
      return 0;
    }
    if (c == '(') {
      ++pos_;
      const int w = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') error("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      const int u = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ',') error("expected ','");
      ++pos_;
      const int v = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ']') error("expected ']'");
      ++pos_;
      return G_.commutator(u, v);
    }
    // a name: one letter followed by digits
    std::size_t start = pos_++;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return images_[i];
    pos_ = start;
    error("unknown generator '" + name + "'");
  }

  const FiniteGroup& G_;
  const std::string& s_;
  const std::vector<std::string>& names_;
  const std::vector<int>& images_;
  std::size_t pos_ = 0;
};

void check_images(const FiniteGroup& G, const std::vector<std::string>& names, const std::vector<int>& images) {
  if (names.size() != images.size()) fail(Errc::InvalidInput, "need one image per generator name");
  for (int x : images)
    if (x < 0 || x >= G.order()) fail(Errc::ImageNotInGroup, "image index " + std::to_string(x) + " is not in the group");
}

}  // namespace

int eval_word(const FiniteGroup& G, const std::string& word, const std::vector<std::string>& names,
              const std::vector<int>& images) {
  check_images(G, names, images);
  return WordParser(G, word, names, images).relator();
}

bool presentation_check(const FiniteGroup& G, const std::vector<std::string>& names,
                        const std::vector<std::string>& relators, const std::vector<int>& images) {
  check_images(G, names, images);
  for (const auto& r : relators)
    if (WordParser(G, r, names, images).relator() != 0) return false;
  return static_cast<int>(generate(G, images).size()) == G.order();
}

// ---------------------------------------------------------------- actions

std::vector<Perm> element_actions(const FiniteGroup& G, const std::vector<Perm>& gen_perms) {
  if (gen_perms.size() != G.generators().size())
    fail(Errc::InvalidInput, "need one permutation per group generator");
  const std::size_t deg = gen_perms.empty() ? 0 : gen_perms.front().size();
  for (const auto& g : gen_perms)
    if (g.size() != deg) fail(Errc::InvalidInput, "permutations of different degrees");
  std::vector<Perm> act(G.order());
  act[0].resize(deg);
  std::iota(act[0].begin(), act[0].end(), 0);
  std::vector<int> order{0};
  std::vector<char> done(G.order(), 0);
  done[0] = 1;
  // breadth-first along the stored spanning tree
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < G.generators().size(); ++j) {
      const int t = G.mul(order[i], G.generators()[j]);
      if (done[t] || G.parent(t) != order[i] || G.parent_gen(t) != static_cast<int>(j)) continue;
      done[t] = 1;
      Perm r(deg);
      for (std::size_t x = 0; x < deg; ++x) r[x] = act[order[i]][gen_perms[j][x]];
      act[t] = std::move(r);
      order.push_back(t);
    }
  // the result must be a homomorphism; check against left multiplication
  for (std::size_t j = 0; j < G.generators().size(); ++j)
    for (int e = 0; e < G.order(); ++e) {
      const Perm& lhs = act[G.mul(G.generators()[j], e)];
      for (std::size_t x = 0; x < deg; ++x)
        if (lhs[x] != gen_perms[j][act[e][x]])
          fail(Errc::InvalidInput, "generator permutations do not define an action of the group");
    }
  return act;
}

std::vector<Perm> coset_action(const FiniteGroup& G, const std::vector<int>& H) {
  std::vector<int> coset(G.order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : H) {
      const int x = G.mul(g, h);
      if (coset[x] >= 0 && coset[x] != id) fail(Errc::InvalidInput, "element set is not a subgroup");
      coset[x] = id;
    }
  }
  std::vector<Perm> act(G.order(), Perm(reps.size()));
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t c = 0; c < reps.size(); ++c) act[g][c] = coset[G.mul(g, reps[c])];
  return act;
}

bool ActionSummary::semiregular(const std::vector<int>& subgroup) const {
  for (int e : subgroup)
    if (e != 0 && fixed_points[e] != 0) return false;
  return true;
}

ActionSummary semiregular_on(const FiniteGroup& G, const std::vector<Perm>& elem_perms) {
  if (static_cast<int>(elem_perms.size()) != G.order()) fail(Errc::InvalidInput, "need one permutation per element");
  ActionSummary s;
  s.fixed_points.resize(G.order());
  for (int e = 0; e < G.order(); ++e) {
    int f = 0;
    for (std::size_t x = 0; x < elem_perms[e].size(); ++x)
      if (elem_perms[e][x] == static_cast<int>(x)) ++f;
    s.fixed_points[e] = f;
  }
  return s;
}

// ---------------------------------------------------------------- references

FiniteGroup abelian_group(const std::vector<int>& orders) {
  for (int o : orders)
    if (o < 1) fail(Errc::BadParameter, "cyclic factor orders must be positive");
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<int> e(orders.size(), 0);
    e[i] = 1 % orders[i];
    gens.push_back(e);
  }
  std::string label;
  for (std::size_t i = 0; i < orders.size(); ++i) label += (i ? "xC" : "C") + std::to_string(orders[i]);
  auto res = closure<std::vector<int>, std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>,
                     VecHash>(
      gens, std::vector<int>(orders.size(), 0),
      [&orders](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
        return r;
      },
      FiniteGroup::kMaxOrder, Origin::FromConstruction, label.empty() ? "1" : label);
  return res.group;
}

FiniteGroup cyclic_group(int n) { return abelian_group({n}); }

FiniteGroup ut3(int p) {
  std::vector<int> e12{1, 1, 0, 0, 1, 0, 0, 0, 1}, e23{1, 0, 0, 0, 1, 1, 0, 0, 1};
  return closure_matrices({e12, e23}, p, FiniteGroup::kMaxOrder, "UT(3," + std::to_string(p) + ")").group;
}

FiniteGroup wreath_cp_cp(int p) {
  std::string base = "(", top;
  for (int i = 1; i <= p; ++i) base += (i > 1 ? " " : "") + std::to_string(i);
  base += ")";
  for (int r = 1; r <= p; ++r) {
    top += "(";
    for (int b = 0; b < p; ++b) top += (b ? " " : "") + std::to_string(b * p + r);
    top += ")";
  }
  const std::string label = "C" + std::to_string(p) + " wr C" + std::to_string(p);
  return closure_perms({perm_parse(base, p * p), perm_parse(top, p * p)}, FiniteGroup::kMaxOrder, label).group;
}

FiniteGroup split_extension(const std::vector<int>& orders, const std::vector<std::vector<int>>& theta, int m,
                            std::string label) {
  const std::size_t r = orders.size();
  if (theta.size() != r) fail(Errc::InvalidInput, "theta needs one image per basis vector");
  if (m < 1) fail(Errc::BadParameter, "top cyclic order must be positive");
  auto reduce = [&](std::vector<int> v) {
    for (std::size_t i = 0; i < r; ++i) v[i] = ((v[i] % orders[i]) + orders[i]) % orders[i];
    return v;
  };
  auto apply = [&](const std::vector<std::vector<int>>& th, const std::vector<int>& v) {
    std::vector<int> out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) out[j] += v[i] * th[i][j];
    return reduce(out);
  };
  std::vector<std::vector<int>> th(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (theta[i].size() != r) fail(Errc::InvalidInput, "theta image has the wrong length");
    th[i] = reduce(theta[i]);
    // a_i has order orders[i]; its image must be killed by the same order
    std::vector<int> killed(r);
    for (std::size_t j = 0; j < r; ++j) killed[j] = th[i][j] * orders[i];
    if (reduce(killed) != std::vector<int>(r, 0)) fail(Errc::InvalidInput, "theta is not well defined on A");
  }
  // powers theta^k, k < m, and theta^m = 1
  std::vector<std::vector<std::vector<int>>> pw(1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    pw[0].push_back(reduce(e));
  }
  for (int k = 1; k <= m; ++k) {
    std::vector<std::vector<int>> next;
    for (std::size_t i = 0; i < r; ++i) next.push_back(apply(th, pw.back()[i]));
    pw.push_back(std::move(next));
  }
  if (pw[m] != pw[0]) fail(Errc::InvalidInput, "theta^m is not the identity");
  pw.pop_back();
  // element: exponent vector of A, then k
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r + 1, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  std::vector<int> c(r + 1, 0);
  c[r] = 1 % m;
  gens.push_back(c);
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    const int k = a[r];
    std::vector<int> w(b.begin(), b.begin() + static_cast<long>(r));
    std::vector<int> tw = apply(pw[k], w);
    std::vector<int> out(r + 1);
    for (std::size_t i = 0; i < r; ++i) out[i] = (a[i] + tw[i]) % orders[i];
    out[r] = (a[r] + b[r]) % m;
    return out;
  };
  return closure<std::vector<int>, std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>,
                 VecHash>(gens, std::vector<int>(r + 1, 0), mul, FiniteGroup::kMaxOrder, Origin::FromConstruction,
                          std::move(label))
      .group;
}

ReferencePresentation s81_9_presentation() {
  return {"S(81,9)",
          {"a", "b", "c"},
          {"a^9", "b^3", "c^3", "ab=ba", "cac^-1=ab^-1", "cbc^-1=a^3b"},
          {9, 3},
          {{1, -1}, {3, 1}},
          3};
}

ReferencePresentation s81_8_presentation() {
  return {"S(81,8)",
          {"a", "b", "c"},
          {"a^9", "b^3", "c^3", "ab=ba", "cac^-1=ab", "cbc^-1=a^3b"},
          {9, 3},
          {{1, 1}, {3, 1}},
          3};
}

FiniteGroup build_presentation(const ReferencePresentation& P) {
  FiniteGroup G = split_extension(P.orders, P.theta, P.top, P.label);
  if (P.names.size() != G.generators().size())
    fail(Errc::InvalidInput, "presentation names do not match the construction's generators");
  if (!presentation_check(G, P.names, P.relators, G.generators()))
    fail(Errc::InvalidInput, "relators of " + P.label + " fail on its construction");
  return G;
}

}  // namespace nakajima
