#include "modtriple/app/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "modtriple/app/oracles.hpp"
#include "modtriple/error.hpp"

namespace modtriple::suites {

using gen::Rng;

namespace {

json jd(const Divisor& d) { return d.to_string(); }
json jt(const ModulusTriple& t) { return io::triple_to_json(t); }
json jm(const RationalMap& f) { return io::map_to_json(f); }
json jc(const Cycle& c) { return io::cycle_to_json(c); }
json jp(const Poly& p) { return p.to_string(); }

using Witness = std::function<json()>;

// Collects the records of one suite in registration order.
class Run {
 public:
  Run(std::string name, const SuiteConfig& cfg)
      : name_(std::move(name)), cfg_(cfg), seed_(gen::mix_seed(cfg.seed, name_)), rng_(seed_) {
    declare("errors", 0, "every sample runs without an exception");
  }

  Rng& rng() { return rng_; }
  const gen::Bounds& bounds() const { return cfg_.bounds; }
  int count(int fallback) const { return cfg_.samples > 0 ? cfg_.samples : fallback; }

  void declare(const std::string& id, std::int64_t required, const std::string& what) {
    CheckRecord& r = get(id);
    r.required = required;
    r.inputs = json{{"property", what},
                    {"seed", seed_},
                    {"degree_bound", cfg_.bounds.degree},
                    {"height_bound", cfg_.bounds.height}};
  }

  void expect(const std::string& id, bool ok, const Witness& w) {
    CheckRecord& r = get(id);
    ++r.checked;
    if (ok) return;
    ++r.failed;
    if (!r.counterexample) r.counterexample = w();
  }

  // bi-implication; "affirmative" counts how often the left side held
  void expect_iff(const std::string& id, bool left, bool right, const Witness& w) {
    if (left) ++affirmative_[name_ + "/" + id];
    expect(id, left == right, [&] {
      json j = w();
      j["left"] = left;
      j["right"] = right;
      return j;
    });
  }

  // runs one sample; exceptions become failures of the "errors" check
  void sample(const std::function<void()>& body, const Witness& w) {
    CheckRecord& r = get("errors");
    ++r.checked;
    try {
      body();
    } catch (const std::exception& e) {
      ++r.failed;
      if (!r.counterexample) {
        json j = w();
        j["error"] = e.what();
        r.counterexample = j;
      }
    }
  }

  SuiteResult finish() {
    SuiteResult out{name_, {}, 0};
    for (const auto& id : order_) {
      CheckRecord r = records_.at(id);
      if (affirmative_.count(id)) r.inputs["affirmative"] = affirmative_.at(id);
      out.checks.push_back(std::move(r));
    }
    return out;
  }

 private:
  CheckRecord& get(const std::string& id) {
    const std::string full = name_ + "/" + id;
    auto it = records_.find(full);
    if (it == records_.end()) {
      order_.push_back(full);
      it = records_.emplace(full, CheckRecord{}).first;
      it->second.id = full;
    }
    return it->second;
  }

  std::string name_;
  SuiteConfig cfg_;
  std::uint64_t seed_;
  Rng rng_;
  std::vector<std::string> order_;
  std::map<std::string, CheckRecord> records_;
  std::map<std::string, std::int64_t> affirmative_;
};

// ---------------------------------------------------------------------------
// generators shared by several suites

// A source triple from which the graph of f into t is admissible: the pullback triple,
// optionally shifted, with a larger plus part, or with part of the minus part removed.
enum class Perturb { Any, KeepMinus, DropMinus };

ModulusTriple admissible_source(Rng& r, const RationalMap& f, const ModulusTriple& t, Perturb mode = Perturb::Any) {
  ModulusTriple s = pullback_triple(f, t);
  int kind = static_cast<int>(r.uniform(0, 3));
  if (mode == Perturb::KeepMinus && kind == 3) kind = 0;
  if (mode == Perturb::DropMinus) kind = 3;
  if (kind == 1) {
    Divisor d = gen::random_effective(r, gen::point_pool(), 2);
    s.plus += d;
    s.minus += d;
  } else if (kind == 2) {
    s.plus += gen::random_effective(r, gen::point_pool(), 2);
  } else if (kind == 3) {
    s.minus = gen::random_below(r, s.minus);
  }
  return s;
}

// degrees with product at most cap
std::vector<int> bounded_degrees(Rng& r, int count, int bound, int cap) {
  for (;;) {
    std::vector<int> d;
    int prod = 1;
    for (int i = 0; i < count; ++i) {
      d.push_back(static_cast<int>(r.uniform(1, bound)));
      prod *= d.back();
    }
    if (prod <= cap) return d;
  }
}

struct Chain {
  std::vector<ModulusTriple> triples;  // T1 ... Tk+1
  std::vector<RationalMap> maps;       // maps[i]: triples[i] -> triples[i+1]
  Cycle graph(size_t i) const { return graph_unchecked(maps[i], triples[i], triples[i + 1]); }
  json to_json() const {
    json j{{"triples", json::array()}, {"maps", json::array()}};
    for (const auto& t : triples) j["triples"].push_back(jt(t));
    for (const auto& f : maps) j["maps"].push_back(jm(f));
    return j;
  }
};

Chain random_chain(Rng& r, const std::vector<int>& degrees, int height, Perturb first = Perturb::Any) {
  Chain c;
  c.triples.push_back(gen::random_proper_triple(r, 2));
  for (size_t i = degrees.size(); i-- > 0;) {
    RationalMap f = gen::random_map_of_degree(r, degrees[i], height);
    ModulusTriple s = admissible_source(r, f, c.triples.front(), i == 0 ? first : Perturb::Any);
    c.triples.insert(c.triples.begin(), s);
    c.maps.insert(c.maps.begin(), f);
  }
  return c;
}

const Cycle& cycle_of(const ComposeResult& r) {
  if (const auto* u = std::get_if<UnsupportedComposition>(&r)) throw std::logic_error("unsupported: " + u->reason);
  return std::get<Cycle>(r);
}

// ---------------------------------------------------------------------------

SuiteResult kernel(const SuiteConfig& cfg) {
  Run run("kernel", cfg);
  Rng& r = run.rng();
  const int n = run.count(500);
  const int h = cfg.bounds.height;
  run.declare("recombine", n, "factor of a product of irreducibles of degree <= 3 multiplies back exactly");
  run.declare("factors-match", n, "the factors found are exactly the irreducibles multiplied together");
  run.declare("factors-irreducible", n, "every factor passes the exhaustive degree <= 6 irreducibility oracle");
  run.declare("canonical-order", n, "factors are monic and sorted by degree then coefficients");
  run.declare("irreducible-agrees", n, "is_irreducible agrees with the oracle on random degree 4..6 polynomials");

  auto oracle_irreducible = [&](int max_degree) {
    for (;;) {
      Poly p = gen::random_poly(r, static_cast<int>(r.uniform(1, max_degree)), h);
      if (oracle::irreducible_upto6(p)) return p.monic();
    }
  };

  for (int i = 0; i < n; ++i) {
    Poly prod(1L);
    std::map<Poly, int> expected;
    run.sample(
        [&] {
          int k = static_cast<int>(r.uniform(1, 4));
          Rat unit = gen::random_rat(r, h);
          if (unit == 0) unit = 1;
          prod = Poly::constant(unit);
          for (int j = 0; j < k; ++j) {
            Poly g = oracle_irreducible(3);
            int e = static_cast<int>(r.uniform(1, 2));
            expected[g] += e;
            prod *= g.pow(static_cast<unsigned>(e));
          }
          FactoredPoly fp = factor(prod);
          auto w = [&] { return json{{"p", jp(prod)}}; };
          run.expect("recombine", fp.expand() == prod, w);
          std::map<Poly, int> got;
          for (const auto& [g, e] : fp.factors) got[g] += e;
          run.expect("factors-match", got == expected && fp.unit == unit, w);
          bool irr = true, ordered = true;
          for (size_t j = 0; j < fp.factors.size(); ++j) {
            const Poly& g = fp.factors[j].first;
            if (g.degree() > 6 || !oracle::irreducible_upto6(g)) irr = false;
            if (!g.is_monic() || (j > 0 && !(fp.factors[j - 1].first < g))) ordered = false;
          }
          run.expect("factors-irreducible", irr, w);
          run.expect("canonical-order", ordered, w);
        },
        [&] { return json{{"p", jp(prod)}}; });
  }

  for (int i = 0; i < n; ++i) {
    Poly p;
    run.sample(
        [&] {
          int deg = static_cast<int>(r.uniform(4, 6));
          if (r.chance(50)) {
            int a = static_cast<int>(r.uniform(2, deg - 2));
            p = gen::random_poly(r, a, h) * gen::random_poly(r, deg - a, h);
          } else {
            p = gen::random_poly(r, deg, h);
          }
          run.expect_iff("irreducible-agrees", is_irreducible(p), oracle::irreducible_upto6(p),
                         [&] { return json{{"p", jp(p)}}; });
        },
        [&] { return json{{"p", jp(p)}}; });
  }
  return run.finish();
}

SuiteResult kernel_props(const SuiteConfig& cfg) {
  Run run("kernel-props", cfg);
  Rng& r = run.rng();
  const int n = run.count(200);
  run.declare("factor-product", n, "factor(p*q) multiplies back to p*q for degree <= 6, height <= 20");
  run.declare("gcd-divides", n, "poly_gcd divides both inputs");
  run.declare("gcd-euclid", n, "poly_gcd equals the plain Euclidean gcd");
  run.declare("gcd-scaling", n, "gcd(a c, b c) = gcd(a, b) * monic(c)");
  run.declare("resultant-swap", n, "Res(a, b) = (-1)^(deg a deg b) Res(b, a)");
  run.declare("resultant-linear", n, "Res(l (x - t), b) = l^deg b * b(t)");
  run.declare("squarefree-coprime", n, "squarefree parts are pairwise coprime and multiply back");

  for (int i = 0; i < n; ++i) {
    Poly a, b, c;
    auto w = [&] { return json{{"a", jp(a)}, {"b", jp(b)}, {"c", jp(c)}}; };
    run.sample(
        [&] {
          a = gen::random_poly(r, static_cast<int>(r.uniform(1, 6)), 20);
          b = gen::random_poly(r, static_cast<int>(r.uniform(1, 6)), 20);
          c = gen::random_poly(r, static_cast<int>(r.uniform(1, 3)), 20);
          Poly ab = a * b;
          run.expect("factor-product", factor(ab).expand() == ab, w);
          Poly g = poly_gcd(a, b);
          run.expect("gcd-divides", (a % g).is_zero() && (b % g).is_zero(), w);
          run.expect("gcd-euclid", g == oracle::euclid_gcd(a, b), w);
          run.expect("gcd-scaling", poly_gcd(a * c, b * c) == g * c.monic(), w);
          int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
          run.expect("resultant-swap", resultant(a, b) == sign * resultant(b, a), w);
          Rat t = gen::random_rat(r, 10), l = gen::random_rat(r, 10);
          if (l == 0) l = 1;
          Poly lin(std::vector<Rat>{-l * t, l});
          Rat expect_res = b.eval(t);
          for (int k = 0; k < b.degree(); ++k) expect_res *= l;
          run.expect("resultant-linear", resultant(lin, b) == expect_res, w);
          Poly sq = a * a * c * b.pow(3);
          auto parts = squarefree_decomposition(sq);
          bool ok = true;
          Poly back(1L);
          for (size_t x = 0; x < parts.size(); ++x) {
            back *= parts[x].second.pow(static_cast<unsigned>(parts[x].first));
            for (size_t y = x + 1; y < parts.size(); ++y)
              if (poly_gcd(parts[x].second, parts[y].second) != Poly(1L)) ok = false;
          }
          run.expect("squarefree-coprime", ok && back == sq.monic(), w);
        },
        w);
  }
  return run.finish();
}

SuiteResult divisors(const SuiteConfig& cfg) {
  Run run("divisors", cfg);
  Rng& r = run.rng();
  const int n = run.count(500);
  run.declare("pullback-degree", n, "deg f*D = deg f * deg D");
  run.declare("projection-formula", n, "f_* f^* D = deg f * D");
  run.declare("principal-additive", n, "div(f g) = div f + div g");
  run.declare("image-composition", n, "g(f(P)) = (g o f)(P)");

  for (int i = 0; i < n; ++i) {
    RationalMap f = RationalMap::identity(), g = RationalMap::identity();
    Divisor d;
    ClosedPoint p = ClosedPoint::infinity();
    auto w = [&] { return json{{"f", jm(f)}, {"g", jm(g)}, {"D", jd(d)}, {"P", p.to_string()}}; };
    run.sample(
        [&] {
          f = gen::random_map(r, cfg.bounds);
          g = gen::random_map(r, cfg.bounds);
          d = gen::random_signed(r, gen::point_pool(), 3);
          p = r.pick(gen::point_pool());
          Divisor pb = pullback_divisor(f, d);
          run.expect("pullback-degree", pb.degree() == f.degree() * d.degree(), w);
          run.expect("projection-formula", pushforward_divisor(f, pb) == Mult(f.degree()) * d, w);
          RationalMap fg = RationalMap::fraction(f.num() * g.num(), f.den() * g.den());
          if (!fg.is_constant())
            run.expect("principal-additive", principal_divisor(fg) == principal_divisor(f) + principal_divisor(g), w);
          else
            run.expect("principal-additive", principal_divisor(f) + principal_divisor(g) == Divisor(), w);
          run.expect("image-composition", point_image(g, point_image(f, p)) == point_image(compose_maps(g, f), p), w);
        },
        w);
  }
  return run.finish();
}

SuiteResult key_lem(const SuiteConfig& cfg) {
  Run run("key-lem", cfg);
  Rng& r = run.rng();
  const int n = run.count(1000);
  run.declare("min-iff-disjoint", n,
              "for every effective E below D1 and D2: E = min(D1, D2) iff |D1 - E| and |D2 - E| are disjoint");
  run.declare("min-brute-force", n, "min_divisor equals the largest E found by enumeration");

  for (int i = 0; i < n; ++i) {
    Divisor d1, d2;
    auto w = [&] { return json{{"D1", jd(d1)}, {"D2", jd(d2)}}; };
    run.sample(
        [&] {
          d1 = gen::random_effective(r, gen::small_pool(), 6);
          d2 = gen::random_effective(r, gen::small_pool(), 6);
          const Divisor m = min_divisor(d1, d2);
          // enumerate every E with 0 <= E <= D1, D2 pointwise
          std::vector<std::pair<ClosedPoint, Mult>> caps;
          for (const auto& p : gen::small_pool()) caps.push_back({p, std::min(d1.at(p), d2.at(p))});
          std::vector<Mult> e(caps.size(), 0);
          bool agree = true;
          Divisor largest;
          Mult best = -1;
          for (;;) {
            Divisor E;
            for (size_t k = 0; k < caps.size(); ++k) E.add(caps[k].first, e[k]);
            bool is_min = E == m;
            bool disj = disjoint((d1 - E).support(), (d2 - E).support());
            if (is_min != disj) agree = false;
            if (disj && E.degree() > best) {
              best = E.degree();
              largest = E;
            }
            size_t k = 0;
            while (k < caps.size() && e[k] == caps[k].second) e[k++] = 0;
            if (k == caps.size()) break;
            ++e[k];
          }
          run.expect("min-iff-disjoint", agree, w);
          run.expect("min-brute-force", largest == m, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult separation_suite(const SuiteConfig& cfg) {
  Run run("separation", cfg);
  Rng& r = run.rng();
  const int n = run.count(500);
  run.declare("disjoint", n, "the separation is a disjoint triple");
  run.declare("idempotent", n, "separating twice changes nothing");
  run.declare("fundamental", n, "the fundamental divisor is the pointwise minimum of T+ and T-");
  run.declare("dual-commutes", n, "separation commutes with the dual");
  run.declare("dual-involution", n, "the dual of the dual is the triple itself");

  for (int i = 0; i < n; ++i) {
    ModulusTriple t;
    auto w = [&] { return json{{"T", jt(t)}}; };
    run.sample(
        [&] {
          t = gen::random_triple(r, 4);
          Separation s = separation(t);
          run.expect("disjoint", classify(s.triple).disjoint, w);
          run.expect("idempotent", separation(s.triple).triple == s.triple && separation(s.triple).fundamental.is_zero(), w);
          run.expect("fundamental", s.fundamental == min_divisor(t.plus, t.minus), w);
          run.expect("dual-commutes", separation(dual(t)).triple == dual(s.triple), w);
          run.expect("dual-involution", dual(dual(t)) == t, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult modulus_suite(const SuiteConfig& cfg) {
  Run run("modulus", cfg);
  Rng& r = run.rng();
  const int n = run.count(200);
  run.declare("monotone-plus", n, "enlarging the source plus divisor never breaks the modulus condition");
  run.declare("factorization", n, "the condition for (a, b) equals the condition for (a o h, b o h), h nonconstant");
  run.declare("shift", n, "the shift morphism is admissible, and invertible exactly when |D| lies in |T+|");

  for (int i = 0; i < n; ++i) {
    ModulusTriple s, t;
    RationalMap a = RationalMap::identity(), b = RationalMap::identity(), h = RationalMap::identity();
    Divisor e;
    auto w = [&] {
      return json{{"S", jt(s)}, {"T", jt(t)}, {"a", jm(a)}, {"b", jm(b)}, {"h", jm(h)}, {"E", jd(e)}};
    };
    run.sample(
        [&] {
          s = gen::random_triple(r, 3);
          t = gen::random_triple(r, 3);
          a = gen::random_map_of_degree(r, static_cast<int>(r.uniform(1, 2)), cfg.bounds.height);
          b = r.chance(20) ? gen::random_constant(r) : gen::random_map_of_degree(r, static_cast<int>(r.uniform(1, 2)), cfg.bounds.height);
          h = gen::random_map_of_degree(r, static_cast<int>(r.uniform(1, 2)), cfg.bounds.height);
          e = gen::random_effective(r, gen::point_pool(), 2).without(s.total.boundary);
          const ProductData data{s, t};
          bool base = modulus_condition(CheckedMap{std::nullopt, a, b}, data);
          ModulusTriple s2 = s;
          s2.plus += e;
          if (base) run.expect("monotone-plus", modulus_condition(CheckedMap{std::nullopt, a, b}, ProductData{s2, t}), w);
          else run.expect("monotone-plus", true, w);
          bool pulled = modulus_condition(CheckedMap{std::nullopt, compose_maps(a, h), compose_maps(b, h)}, data);
          run.expect_iff("factorization", base, pulled, w);

          ShiftMorphism sm = shift_morphism(t, e.without(t.total.boundary));
          const PointSet dp = e.without(t.total.boundary).support(), tp = t.plus.support();
          bool inside = std::includes(tp.begin(), tp.end(), dp.begin(), dp.end());
          run.expect("shift", is_admissible(sm.forward) && sm.is_iso == inside && sm.reverse_admissible == inside, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult point_condition(const SuiteConfig& cfg) {
  Run run("point-condition", cfg);
  Rng& r = run.rng();
  const int n = run.count(200);
  run.declare("pullback-point", n, "w satisfies the point condition for f*T iff f(w) does for T");
  for (int i = 0; i < n; ++i) {
    ModulusTriple t;
    RationalMap f = RationalMap::identity();
    ClosedPoint w = ClosedPoint::infinity();
    auto wit = [&] { return json{{"T", jt(t)}, {"f", jm(f)}, {"w", w.to_string()}}; };
    run.sample(
        [&] {
          t = gen::random_proper_triple(r, 3);
          f = gen::random_map(r, cfg.bounds);
          ModulusTriple u = pullback_triple(f, t);
          // half the time take w over the support of T, where the condition can fail
          PointSet pts = set_union(u.plus.support(), u.minus.support());
          if (!pts.empty() && r.chance(60)) {
            std::vector<ClosedPoint> v(pts.begin(), pts.end());
            w = r.pick(v);
          } else {
            w = r.pick(gen::point_pool());
          }
          run.expect_iff("pullback-point", modulus_condition_point(w, u), modulus_condition_point(point_image(f, w), t), wit);
        },
        wit);
  }
  return run.finish();
}

SuiteResult closure_criterion(const SuiteConfig& cfg) {
  Run run("closure-criterion", cfg);
  Rng& r = run.rng();
  const int n = run.count(200);
  run.declare("admissible-iff-closure", n,
              "from (P1, D, D) into a disjoint S: admissible iff no point of the component maps into |S+|");
  for (int i = 0; i < n; ++i) {
    ModulusTriple t, s;
    RationalMap a = RationalMap::identity(), b = RationalMap::identity();
    auto w = [&] { return json{{"T", jt(t)}, {"S", jt(s)}, {"a", jm(a)}, {"b", jm(b)}}; };
    run.sample(
        [&] {
          Divisor d = gen::random_effective(r, gen::point_pool(), 3);
          t = ModulusTriple{CurveSpace::proper(), d, d};
          s = gen::random_disjoint_triple(r, 3);
          if (r.chance(40)) s.plus = Divisor();
          a = gen::random_map_of_degree(r, static_cast<int>(r.uniform(1, 3)), cfg.bounds.height);
          b = r.chance(30) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
          Cycle alpha = Cycle::make(t, s, {Component::make(a, b, 1)});
          const Component& c = alpha.components.front();
          bool closure_ok = c.b.is_constant() ? s.plus.at(c.b.constant_value()) == 0 : preimage(c.b, s.plus.support()).points.empty();
          run.expect_iff("admissible-iff-closure", is_admissible(alpha), closure_ok, w);
        },
        w);
  }
  return run.finish();
}

// b*T- >= a*S- away from a^{-1}(S° complement), and {n interior : a(n) in |S-|} inside b^{-1}|T-|
void check_goes(Run& run, const Cycle& alpha, const Witness& w) {
  const ModulusTriple& S = alpha.source;
  const ModulusTriple& T = alpha.target;
  for (const auto& c : alpha.components) {
    PointSet exclude = preimage(c.a, S.interior_complement()).points;
    Preimage hits = preimage(c.b, T.minus.support());
    if (!c.b.is_constant()) {
      Divisor diff = pullback_divisor(c.b, T.minus) - pullback_divisor(c.a, S.minus);
      run.expect("goes-inequality", diff.without(exclude).is_effective(), w);
    }
    bool inclusion = true;
    for (const auto& p : preimage(c.a, S.minus.support()).points)
      if (!exclude.count(p) && !hits.contains(p)) inclusion = false;
    run.expect("goes-inclusion", inclusion, w);
  }
}

SuiteResult composition(const SuiteConfig& cfg) {
  Run run("composition", cfg);
  Rng& r = run.rng();
  const int n = run.count(500);
  const int na = run.count(200);
  run.declare("generated-admissible", n, "the generated graphs are admissible");
  run.declare("closure", n, "the composite of two admissible graphs is admissible");
  run.declare("graph-of-composite", n, "the composite cycle is the graph of the composite map");
  run.declare("goes-inequality", n, "T-|V >= S-|V on the interior for every admissible component");
  run.declare("goes-inclusion", n, "interior points over |S-| lie over |T-| for every admissible component");
  run.declare("associativity", na, "(h after g) after f = h after (g after f) on graph cycles");

  for (int i = 0; i < n; ++i) {
    Chain ch;
    auto w = [&] { return ch.to_json(); };
    run.sample(
        [&] {
          ch = random_chain(r, bounded_degrees(r, 2, cfg.bounds.degree, cfg.bounds.degree * cfg.bounds.degree), cfg.bounds.height);
          Cycle alpha = ch.graph(0), beta = ch.graph(1);
          bool gen_ok = is_admissible(alpha) && is_admissible(beta);
          run.expect("generated-admissible", gen_ok, w);
          if (!gen_ok) return;
          bool closed = false;
          try {
            const Cycle c = cycle_of(compose(alpha, beta));
            closed = is_admissible(c);
            run.expect("graph-of-composite",
                       c == graph_unchecked(compose_maps(ch.maps[1], ch.maps[0]), ch.triples[0], ch.triples[2]), w);
            check_goes(run, c, w);
          } catch (const std::logic_error&) {
            closed = false;
          }
          run.expect("closure", closed, w);
          check_goes(run, alpha, w);
          check_goes(run, beta, w);
        },
        w);
  }

  for (int i = 0; i < na; ++i) {
    Chain ch;
    auto w = [&] { return ch.to_json(); };
    run.sample(
        [&] {
          ch = random_chain(r, bounded_degrees(r, 3, cfg.bounds.degree, cfg.bounds.degree * cfg.bounds.degree), cfg.bounds.height);
          Cycle f = ch.graph(0), g = ch.graph(1), h = ch.graph(2);
          Cycle left = cycle_of(compose(cycle_of(compose(f, g)), h));
          Cycle right = cycle_of(compose(f, cycle_of(compose(g, h))));
          run.expect("associativity", left == right, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult fixtures(const SuiteConfig& cfg) {
  Run run("fixtures", cfg);
  const ModulusTriple box = ModulusTriple::proper(parse_divisor("P(inf)"), Divisor());
  const ModulusTriple box_dual = ModulusTriple::proper(Divisor(), parse_divisor("P(inf)"));
  const ModulusTriple shifted = ModulusTriple::proper(parse_divisor("2*P(inf)"), parse_divisor("P(inf)"));
  const RationalMap id = RationalMap::identity();
  auto none = [] { return json{{"fixture", "fixed inputs"}}; };
  for (const char* id_ : {"identity-admissible", "identity-very-good", "identity-not-excellent", "shift-admissible",
                          "shift-iso", "composite-excellent", "g-refuses-identity", "square-not-admissible",
                          "compactify-levels"})
    run.declare(id_, 1, "fixed example");

  run.sample(
      [&] {
        Cycle first = graph_cycle(id, box, box_dual);
        run.expect("identity-admissible", is_admissible(first), none);
        Position p = position_classify(first).front();
        run.expect("identity-very-good", p.very_good, none);
        run.expect("identity-not-excellent", !p.excellent, none);

        Cycle second = graph_cycle(id, shifted, box);
        run.expect("shift-admissible", is_admissible(second), none);
        ShiftMorphism sm = shift_morphism(box, parse_divisor("P(inf)"));
        run.expect("shift-iso", sm.is_iso && sm.reverse_admissible && sm.forward == second, none);

        const Cycle comp = cycle_of(compose(second, first));
        Position q = position_classify(comp).front();
        run.expect("composite-excellent", is_admissible(comp) && q.excellent && q.very_good, none);

        bool refused = false;
        try {
          g_adjunction_member(first, ModulusPair{CurveSpace::proper(), parse_divisor("P(inf)")});
        } catch (const Error& e) {
          refused = e.kind() == ErrorKind::NotExcellent;
        }
        run.expect("g-refuses-identity", refused, none);

        RationalMap sq = RationalMap::polynomial(parse_poly("x^2"));
        run.expect("square-not-admissible", !modulus_condition(CheckedMap{std::nullopt, id, sq}, ProductData{box, box}), none);

        const ModulusTriple line = ModulusTriple::make(CurveSpace::open({ClosedPoint::infinity()}), Divisor(), Divisor());
        Mult n1 = minimal_compactification_level(line, box, graph_cycle(id, line, box));
        Mult n2 = minimal_compactification_level(line, box, graph_cycle(sq, line, box));
        Mult n3 = minimal_compactification_level(line, box, graph_cycle(RationalMap::constant(ClosedPoint::rational(Rat(0))), line, box));
        run.expect("compactify-levels", n1 == 1 && n2 == 2 && n3 == 1, [&] {
          return json{{"levels", {n1, n2, n3}}};
        });
      },
      none);
  return run.finish();
}

// ---------------------------------------------------------------------------

ModulusTriple random_min_class(Rng& r) {
  for (int k = 0; k < 50; ++k) {
    ModulusTriple t = gen::random_proper_triple(r, 3);
    if (classify(t).min_class) return t;
  }
  return iy_to_triple(gen::random_iy(r));
}

ModulusTriple random_man_class(Rng& r) {
  for (int k = 0; k < 50; ++k) {
    ModulusTriple t = gen::random_proper_triple(r, 3);
    if (classify(t).man_class) return t;
  }
  return mlog_to_triple(gen::random_mlog(r));
}

ClosedPoint random_extra_point(Rng& r) { return r.pick(gen::point_pool()); }

SuiteResult bridges(const SuiteConfig& cfg) {
  Run run("bridges", cfg);
  Rng& r = run.rng();
  const int nr = run.count(200);
  const int nm = run.count(500);
  run.declare("iy-roundtrip-objects", nr, "kappa' after kappa is the identity on (Y, Z) objects");
  run.declare("iy-roundtrip-triples", nr, "kappa after kappa' is the identity on min-class triples");
  run.declare("iy-morphisms", nm, "a map is a morphism of (Y, Z) objects iff its graph is admissible between the images");
  run.declare("mlog-roundtrip-objects", nr, "kappa' after kappa is the identity on log objects");
  run.declare("mlog-roundtrip-triples", nr, "kappa after kappa' is the identity on man-class triples");
  run.declare("mlog-morphisms", nm, "a map is a log morphism iff its graph is admissible between the images");

  for (int i = 0; i < nr; ++i) {
    IYObject o;
    MlogObject m;
    ModulusTriple t, u;
    auto w = [&] {
      return json{{"iy", io::iy_to_json(o)}, {"mlog", io::mlog_to_json(m)}, {"min_triple", jt(t)}, {"man_triple", jt(u)}};
    };
    run.sample(
        [&] {
          o = gen::random_iy(r);
          m = gen::random_mlog(r);
          t = random_min_class(r);
          u = random_man_class(r);
          run.expect("iy-roundtrip-objects", classify(iy_to_triple(o)).min_class && triple_to_iy(iy_to_triple(o)) == o, w);
          run.expect("iy-roundtrip-triples", iy_to_triple(triple_to_iy(t)) == t, w);
          run.expect("mlog-roundtrip-objects", classify(mlog_to_triple(m)).man_class && triple_to_mlog(mlog_to_triple(m)) == m, w);
          run.expect("mlog-roundtrip-triples", mlog_to_triple(triple_to_mlog(u)) == u, w);
        },
        w);
  }

  for (int i = 0; i < nm; ++i) {
    IYObject o1, o2;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"f", jm(f)}, {"from", io::iy_to_json(o1)}, {"to", io::iy_to_json(o2)}}; };
    run.sample(
        [&] {
          o2 = gen::random_iy(r);
          if (r.chance(20)) {
            f = gen::random_constant(r);
            o1 = gen::random_iy(r);
          } else {
            f = gen::random_map(r, cfg.bounds);
            if (r.chance(65)) {
              // close to a morphism: Z1 = f*Z2, Y1 below f*Y2, then maybe nudged
              Divisor z = pullback_divisor(f, o2.Z);
              Divisor y = gen::random_below(r, pullback_divisor(f, o2.Y));
              int nudge = static_cast<int>(r.uniform(0, 5));
              if (nudge == 1) y.add(random_extra_point(r), 1);
              if (nudge == 2) z.add(random_extra_point(r), 1);
              if (nudge == 3 && !z.is_zero()) z = z.without({*z.support().begin()});
              if (nudge == 4) z = z.reduced_part();
              o1 = IYObject{y.without(z.support()), z};
            } else {
              o1 = gen::random_iy(r);
            }
          }
          bool morph = is_iy_morphism(f, o1, o2);
          bool adm = is_admissible(graph_unchecked(f, iy_to_triple(o1), iy_to_triple(o2)));
          run.expect_iff("iy-morphisms", morph, adm, w);
        },
        w);
  }

  for (int i = 0; i < nm; ++i) {
    MlogObject o1, o2;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"f", jm(f)}, {"from", io::mlog_to_json(o1)}, {"to", io::mlog_to_json(o2)}}; };
    run.sample(
        [&] {
          o2 = gen::random_mlog(r);
          if (r.chance(20)) {
            f = gen::random_constant(r);
            o1 = gen::random_mlog(r);
            if (r.chance(50)) o1.modulus = Divisor();
          } else {
            f = gen::random_map(r, cfg.bounds);
            if (r.chance(65)) {
              Divisor bd = Divisor::reduced(preimage(f, o2.boundary.support()).points);
              Divisor md = gen::random_below(r, pullback_divisor(f, o2.modulus));
              int nudge = static_cast<int>(r.uniform(0, 4));
              if (nudge == 1) bd = (bd + Divisor::point(random_extra_point(r))).reduced_part();
              if (nudge == 2 && !bd.is_zero()) bd = bd.without({*bd.support().begin()});
              if (nudge == 3) md.add(random_extra_point(r), 1);
              o1 = MlogObject{bd, md};
            } else {
              o1 = gen::random_mlog(r);
            }
          }
          bool morph = is_mlog_morphism(f, o1, o2);
          bool adm = is_admissible(graph_unchecked(f, mlog_to_triple(o1), mlog_to_triple(o2)));
          run.expect_iff("mlog-morphisms", morph, adm, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult ne(const SuiteConfig& cfg) {
  Run run("ne", cfg);
  Rng& r = run.rng();
  const int ns = run.count(300);
  const int nh = run.count(200);
  run.declare("saturated", ns, "the embedded triple of a pair with signed divisor is saturated");
  run.declare("effective-embedding", ns, "for an effective divisor the embedding is (P1, D, 0)");
  run.declare("hom-iff", nh, "hom membership for signed pairs iff admissibility between the embedded triples");
  run.declare("pb-supp", nh, "|f*D| = f^{-1}|D|");

  for (int i = 0; i < ns; ++i) {
    NePair x;
    ModulusPair m;
    auto w = [&] { return json{{"X", io::ne_to_json(x)}, {"M", io::pair_to_json(m)}}; };
    run.sample(
        [&] {
          x = gen::random_ne(r);
          m = gen::random_pair(r);
          run.expect("saturated", classify(ne_embed(x)).saturated, w);
          run.expect("effective-embedding", ne_embed(mcor_embed(m)) == phi_embed(m), w);
        },
        w);
  }
  for (int i = 0; i < nh; ++i) {
    NePair x, y;
    RationalMap f = RationalMap::identity();
    Divisor d;
    auto w = [&] { return json{{"X", io::ne_to_json(x)}, {"Y", io::ne_to_json(y)}, {"f", jm(f)}, {"D", jd(d)}}; };
    run.sample(
        [&] {
          y = gen::random_ne(r);
          if (r.chance(15)) {
            f = gen::random_constant(r);
            x = gen::random_ne(r);
          } else {
            f = gen::random_map(r, cfg.bounds);
            if (r.chance(60)) {
              x = NePair{pullback_divisor(f, y.infinity)};
              if (r.chance(50)) x.infinity += gen::random_signed(r, gen::point_pool(), 2);
            } else {
              x = gen::random_ne(r);
            }
          }
          Cycle cand = graph_unchecked(f, ne_embed(x), ne_embed(y));
          run.expect_iff("hom-iff", ne_hom_member(cand.components, x, y), is_admissible(cand), w);

          RationalMap g = f.is_constant() ? gen::random_map(r, cfg.bounds) : f;
          d = gen::random_signed(r, gen::point_pool(), 4);
          f = g;
          run.expect("pb-supp", pullback_divisor(g, d).support() == preimage(g, d.support()).points, w);
        },
        w);
  }
  return run.finish();
}

SuiteResult compactify(const SuiteConfig& cfg) {
  Run run("compactify", cfg);
  Rng& r = run.rng();
  const int n = run.count(100);
  run.declare("generated-admissible", n, "the generated candidate is admissible from the open triple");
  run.declare("level-admissible", n, "the returned level is admissible");
  run.declare("level-minimal", n, "the level below the returned one is not admissible");
  run.declare("level-stable", n, "the two levels above the returned one are admissible");
  run.declare("comp-object", n, "the returned stage is a compactification of the open triple");

  for (int i = 0; i < n; ++i) {
    ModulusTriple t, s;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"T", jt(t)}, {"S", jt(s)}, {"f", jm(f)}}; };
    run.sample(
        [&] {
          Cycle alpha;
          bool ok = false;
          for (int attempt = 0; attempt < 20 && !ok; ++attempt) {
            s = gen::random_proper_triple(r, 2);
            PointSet b;
            int nb = static_cast<int>(r.uniform(1, 2));
            for (int k = 0; k < nb; ++k) b.insert(r.pick(gen::point_pool()));
            Divisor plus, minus;
            if (r.chance(15)) {
              f = gen::random_constant(r);
              plus = gen::random_effective(r, gen::point_pool(), 2);
              minus = gen::random_below(r, plus);
            } else {
              f = gen::random_map(r, cfg.bounds);
              plus = pullback_divisor(f, s.plus) + gen::random_effective(r, gen::point_pool(), 1);
              minus = gen::random_below(r, pullback_divisor(f, s.minus));
            }
            if (r.chance(30)) {
              Divisor d = gen::random_effective(r, gen::point_pool(), 1);
              plus += d;
              minus += d;
            }
            t = ModulusTriple{CurveSpace::open(b), plus.without(b), minus.without(b)};
            alpha = graph_unchecked(f, t, s);
            ok = is_admissible(alpha);
          }
          run.expect("generated-admissible", ok, w);
          if (!ok) return;
          Mult lvl = minimal_compactification_level(t, s, alpha);
          run.expect("level-admissible", admissible_at_level(alpha, lvl), w);
          run.expect("level-minimal", lvl == 0 || !admissible_at_level(alpha, lvl - 1), w);
          run.expect("level-stable", admissible_at_level(alpha, lvl + 1) && admissible_at_level(alpha, lvl + 2), w);
          run.expect("comp-object",
                     is_comp_object(CompObject{t, compactification_stage(t, lvl), lvl * Divisor::reduced(t.total.boundary)}), w);
        },
        w);
  }
  return run.finish();
}

SuiteResult adjunctions(const SuiteConfig& cfg) {
  Run run("adjunctions", cfg);
  Rng& r = run.rng();
  const int n = run.count(200);
  const int ne_ = run.count(50);
  run.declare("lambda", n, "Cor(X, interior T) membership iff admissibility from (X, 0, 0)");
  run.declare("p", n, "membership from p(T) iff admissibility from the sum T, summand by summand");
  run.declare("p-empty", ne_, "with T- nonzero on every summand both hom sides are zero");
  run.declare("q", n, "membership into q(T) iff admissibility into T");
  run.declare("s", n, "admissibility from T iff admissibility from its separation");
  run.declare("g", n, "membership into g(T) iff admissible in excellent position; the rest are refused");

  auto random_space = [&](const PointSet& must) {
    if (must.empty()) return CurveSpace::proper();
    return CurveSpace::open(must);
  };

  for (int i = 0; i < n; ++i) {
    ModulusTriple t;
    CurveSpace x;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"X", io::space_to_json(x)}, {"T", jt(t)}, {"f", jm(f)}}; };
    run.sample(
        [&] {
          t = gen::random_triple(r, 3);
          f = r.chance(20) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
          PointSet bnd;
          if (!f.is_constant() && r.chance(50)) bnd = preimage(f, t.interior_complement()).points;
          if (r.chance(30)) bnd.insert(r.pick(gen::point_pool()));
          x = random_space(bnd);
          Transport tr = lambda_adjunction_member(graph_unchecked(f, lambda_embed(x), t));
          run.expect_iff("lambda", tr.left, tr.right, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    TripleSum ts;
    std::vector<Cycle> parts;
    ModulusPair m;
    auto w = [&] {
      json j{{"M", io::pair_to_json(m)}, {"parts", json::array()}};
      for (const auto& p : parts) j["parts"].push_back(jc(p));
      return j;
    };
    run.sample(
        [&] {
          ts.clear();
          parts.clear();
          m = gen::random_pair(r);
          int k = static_cast<int>(r.uniform(1, 3));
          for (int j = 0; j < k; ++j) {
            ModulusTriple tj = gen::random_disjoint_triple(r, 3);
            bool pair_like = r.chance(60);
            if (pair_like) tj.minus = Divisor();
            if (r.chance(20)) {
              parts.push_back(Cycle{tj, phi_embed(m), {}});
            } else {
              RationalMap f = r.chance(15) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
              if (pair_like && !f.is_constant() && r.chance(60))
                tj.plus = pullback_divisor(f, m.infinity) + gen::random_effective(r, gen::point_pool(), 1);
              parts.push_back(graph_unchecked(f, tj, phi_embed(m)));
            }
            ts.push_back(tj);
          }
          Transport tr = p_transport(ts, parts, m);
          run.expect_iff("p", tr.left, tr.right, w);
        },
        w);
  }

  for (int i = 0; i < ne_; ++i) {
    TripleSum ts;
    std::vector<Cycle> parts;
    ModulusPair m;
    auto w = [&] {
      json j{{"M", io::pair_to_json(m)}, {"parts", json::array()}};
      for (const auto& p : parts) j["parts"].push_back(jc(p));
      return j;
    };
    run.sample(
        [&] {
          ts.clear();
          parts.clear();
          m = gen::random_pair(r);
          int k = static_cast<int>(r.uniform(1, 3));
          bool any_admissible = false;
          for (int j = 0; j < k; ++j) {
            ModulusTriple tj = gen::random_disjoint_triple(r, 3);
            if (tj.minus.is_zero()) {
              for (const auto& p : gen::point_pool())
                if (!tj.plus.at(p)) {
                  tj.minus.add(p, r.uniform(1, 3));
                  break;
                }
            }
            RationalMap f = r.chance(15) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
            Cycle part = graph_unchecked(f, tj, phi_embed(m));
            any_admissible = any_admissible || is_admissible(part);
            ts.push_back(tj);
            parts.push_back(part);
          }
          Transport tr = p_transport(ts, parts, m);
          run.expect("p-empty", p_left(ts).empty() && !tr.left && !tr.right && !any_admissible, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    ModulusPair m;
    ModulusTriple t;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"M", io::pair_to_json(m)}, {"T", jt(t)}, {"f", jm(f)}}; };
    run.sample(
        [&] {
          m = gen::random_pair(r);
          t = gen::random_disjoint_triple(r, 3);
          f = r.chance(20) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
          if (!f.is_constant() && r.chance(50)) m.infinity = pullback_divisor(f, t.plus) + gen::random_effective(r, gen::point_pool(), 1);
          Transport tr = q_transport(graph_unchecked(f, phi_embed(m), t), m);
          run.expect_iff("q", tr.left, tr.right, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    ModulusTriple t, s;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"T", jt(t)}, {"S", jt(s)}, {"f", jm(f)}}; };
    run.sample(
        [&] {
          s = gen::random_disjoint_triple(r, 3);
          f = r.chance(20) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
          if (!f.is_constant() && r.chance(60)) {
            t = admissible_source(r, f, s);
            Divisor d = gen::random_effective(r, gen::point_pool(), 2);
            t.plus += d;
            t.minus += d;
          } else {
            t = gen::random_proper_triple(r, 3);
          }
          Transport tr = s_transport(graph_unchecked(f, t, s));
          run.expect_iff("s", tr.left, tr.right, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    ModulusPair m;
    ModulusTriple t;
    RationalMap f = RationalMap::identity();
    auto w = [&] { return json{{"M", io::pair_to_json(m)}, {"T", jt(t)}, {"f", jm(f)}}; };
    run.sample(
        [&] {
          t = gen::random_proper_triple(r, 3);
          f = r.chance(20) ? gen::random_constant(r) : gen::random_map(r, cfg.bounds);
          m = gen::random_pair(r);
          if (!f.is_constant() && r.chance(60)) {
            // remove the points over |T-| so the candidate can be in excellent position
            PointSet bnd = preimage(f, t.minus.support()).points;
            if (r.chance(25) && !bnd.empty()) bnd.erase(bnd.begin());
            Divisor inf = pullback_divisor(f, t.plus) + gen::random_effective(r, gen::point_pool(), 1);
            m = ModulusPair{bnd.empty() ? CurveSpace::proper() : CurveSpace::open(bnd), inf.without(bnd)};
          }
          Cycle cand = graph_unchecked(f, phi_embed(m), t);
          try {
            Transport tr = g_adjunction_member(cand, m);
            run.expect_iff("g", tr.left, tr.right, w);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotExcellent) throw;
            // refused candidates are admissible but not excellent; the restricted side must reject them
            run.expect("g", !mcor_admissible(cand.components, m, g_shrink_pair(t)), w);
          }
        },
        w);
  }
  return run.finish();
}

bool all_very_good(const Cycle& c) {
  for (const auto& p : position_classify(c))
    if (!p.very_good) return false;
  return true;
}

bool none_very_good(const Cycle& c) {
  for (const auto& p : position_classify(c))
    if (p.very_good) return false;
  return !c.components.empty();
}

SuiteResult positions(const SuiteConfig& cfg) {
  Run run("positions", cfg);
  Rng& r = run.rng();
  const int n = run.count(300);
  const int cap = cfg.bounds.degree * cfg.bounds.degree;
  run.declare("very-good-closed", n, "composites of very good graph cycles are very good");
  run.declare("not-very-good-propagates", n, "if no component of the first cycle is very good, no composite component is");
  run.declare("bad-absorbs", n, "composite components built from a bad component are bad");
  run.declare("reduce-compatible", n, "reducing before composing gives the same reduced composite");
  run.declare("excellent-very-good", n, "excellent position implies very good position");
  run.declare("reduce-idempotent", n, "reduce is idempotent");

  auto excellent_check = [&](const Cycle& c, const Witness& w) {
    bool ok = true;
    for (const auto& p : position_classify(c))
      if (p.excellent && !p.very_good) ok = false;
    run.expect("excellent-very-good", ok, w);
  };

  for (int i = 0; i < n; ++i) {
    Chain ch;
    auto w = [&] { return ch.to_json(); };
    run.sample(
        [&] {
          // resample until both graphs are very good
          for (int attempt = 0; attempt < 50; ++attempt) {
            ch = random_chain(r, bounded_degrees(r, 2, cfg.bounds.degree, cap), cfg.bounds.height, Perturb::KeepMinus);
            if (all_very_good(ch.graph(0)) && all_very_good(ch.graph(1))) break;
          }
          Cycle a = ch.graph(0), b = ch.graph(1);
          if (!(all_very_good(a) && all_very_good(b))) throw std::runtime_error("no very good pair generated");
          Cycle c = cycle_of(compose(a, b));
          run.expect("very-good-closed", all_very_good(c), w);
          excellent_check(c, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    Chain ch;
    auto w = [&] { return ch.to_json(); };
    run.sample(
        [&] {
          for (int attempt = 0; attempt < 50; ++attempt) {
            ch = random_chain(r, bounded_degrees(r, 2, cfg.bounds.degree, cap), cfg.bounds.height, Perturb::DropMinus);
            if (none_very_good(ch.graph(0))) break;
          }
          Cycle a = ch.graph(0), b = ch.graph(1);
          if (!none_very_good(a)) throw std::runtime_error("no cycle outside very good position generated");
          Cycle c = cycle_of(compose(a, b));
          run.expect("not-very-good-propagates", none_very_good(c), w);
          excellent_check(a, w);
        },
        w);
  }

  for (int i = 0; i < n; ++i) {
    Chain ch;
    Cycle a, b;
    auto w = [&] { return json{{"alpha", jc(a)}, {"beta", jc(b)}}; };
    run.sample(
        [&] {
          // a rational c with g(c) in |T3-| off |T3+|, so that c is in |T2-| off |T2+|
          ClosedPoint c = ClosedPoint::infinity(), q = ClosedPoint::infinity();
          for (int attempt = 0; attempt < 50; ++attempt) {
            ch = random_chain(r, bounded_degrees(r, 2, cfg.bounds.degree, cap), cfg.bounds.height);
            c = r.pick(gen::rational_pool());
            q = point_image(ch.maps[1], c);
            if (ch.triples[2].plus.at(q) > 0) continue;
            ch.triples[2].minus.add(q, 1);
            ch.triples[1] = pullback_triple(ch.maps[1], ch.triples[2]);
            if (r.chance(50)) ch.triples[1].plus += gen::random_effective(r, gen::point_pool(), 1).without({c});
            ch.triples[0] = admissible_source(r, ch.maps[0], ch.triples[1]);
            break;
          }
          const ModulusTriple &t1 = ch.triples[0], &t2 = ch.triples[1], &t3 = ch.triples[2];
          const RationalMap id = RationalMap::identity();
          int which = static_cast<int>(r.uniform(0, 2));  // 0: bad in alpha, 1: bad in beta, 2: both
          std::vector<Component> ac{Component::make(id, ch.maps[0])}, bc{Component::make(id, ch.maps[1])};
          if (which != 1) ac.push_back(Component::make(id, RationalMap::constant(c), r.uniform(1, 2)));
          if (which != 0) bc.push_back(Component::make(id, RationalMap::constant(q), r.uniform(1, 2)));
          a = Cycle::make(t1, t2, ac);
          b = Cycle::make(t2, t3, bc);
          Cycle comp = cycle_of(compose(a, b));
          bool absorb = true;
          for (const auto& x : comp.components)
            if (x.b.is_constant() && !component_position(x, t1, t3).bad) absorb = false;
          // bad parts alone compose to something that reduces to zero
          Cycle bad_a{t1, t2, {}}, bad_b{t2, t3, {}};
          for (const auto& x : a.components)
            if (component_position(x, t1, t2).bad) bad_a.components.push_back(x);
          for (const auto& x : b.components)
            if (component_position(x, t2, t3).bad) bad_b.components.push_back(x);
          absorb = absorb && reduce_cycle(cycle_of(compose(bad_a, b))).is_zero() &&
                   reduce_cycle(cycle_of(compose(a, bad_b))).is_zero();
          run.expect("bad-absorbs", absorb && !(bad_a.is_zero() && bad_b.is_zero()), w);
          Cycle lhs = reduce_cycle(comp);
          Cycle rhs = reduce_cycle(cycle_of(compose(reduce_cycle(a), reduce_cycle(b))));
          run.expect("reduce-compatible", lhs == rhs, w);
          run.expect("reduce-idempotent", reduce_cycle(lhs) == lhs && reduce_cycle(reduce_cycle(a)) == reduce_cycle(a), w);
          excellent_check(comp, w);
        },
        w);
  }
  return run.finish();
}

io::Object random_object(Rng& r, int kind, const gen::Bounds& b) {
  switch (kind) {
    case 0: return gen::random_signed(r, gen::point_pool(), 4);
    case 1: return r.chance(20) ? gen::random_constant(r) : gen::random_map(r, b);
    case 2: return gen::random_triple(r, 3);
    case 3: {
      std::vector<Component> comps;
      int k = static_cast<int>(r.uniform(0, 2));
      for (int j = 0; j < k; ++j)
        comps.push_back(Component::make(gen::random_map(r, b), r.chance(25) ? gen::random_constant(r) : gen::random_map(r, b),
                                        r.uniform(1, 3)));
      return Cycle::make(gen::random_triple(r, 2), gen::random_triple(r, 2), comps);
    }
    case 4: return gen::random_iy(r);
    case 5: return gen::random_mlog(r);
    case 6: return gen::random_ne(r);
    default: return gen::random_pair(r, false);
  }
}

SuiteResult roundtrip(const SuiteConfig& cfg) {
  Run run("roundtrip", cfg);
  Rng& r = run.rng();
  const int n = run.count(500);
  run.declare("json", n, "print then parse is the identity on every object kind");
  run.declare("text", n, "points, divisors and polynomials survive their text form");
  for (int i = 0; i < n; ++i) {
    std::string text;
    auto w = [&] { return json{{"text", text}}; };
    run.sample(
        [&] {
          io::Object o = random_object(r, i % 8, cfg.bounds);
          text = io::object_to_json(o).dump();
          io::Object back = io::object_from_json(json::parse(text));
          run.expect("json", back == o && io::object_to_json(back).dump() == text, w);
          Divisor d = gen::random_signed(r, gen::point_pool(), 4);
          Poly p = gen::random_poly(r, static_cast<int>(r.uniform(0, 5)), cfg.bounds.height);
          ClosedPoint pt = r.pick(gen::point_pool());
          text = d.to_string() + " | " + p.to_string() + " | " + pt.to_string();
          run.expect("text", parse_divisor(d.to_string()) == d && parse_poly(p.to_string()) == p && parse_point(pt.to_string()) == pt, w);
        },
        w);
  }
  return run.finish();
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"kernel", kernel},
      {"kernel-props", kernel_props},
      {"divisors", divisors},
      {"key-lem", key_lem},
      {"separation", separation_suite},
      {"modulus", modulus_suite},
      {"point-condition", point_condition},
      {"closure-criterion", closure_criterion},
      {"composition", composition},
      {"fixtures", fixtures},
      {"bridges", bridges},
      {"ne", ne},
      {"compactify", compactify},
      {"adjunctions", adjunctions},
      {"positions", positions},
      {"roundtrip", roundtrip},
  };
  return r;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

std::vector<std::string> parse_suite_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& n : suite_names())
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      continue;
    }
    if (!is_suite(item)) throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + item + "\"");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "no suites selected");
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn(cfg);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& s : cfg.suites) out.push_back(run_suite(s, cfg));
  return out;
}

json report_json(const SuiteConfig& cfg, const std::vector<SuiteResult>& results) {
  json rep;
  rep["schema"] = 1;
  rep["config"] = json{{"seed", cfg.seed},
                       {"samples", cfg.samples},
                       {"degree_bound", cfg.bounds.degree},
                       {"height_bound", cfg.bounds.height},
                       {"suites", cfg.suites}};
  json suites = json::array();
  json timing = json::object();
  std::int64_t total = 0, passed = 0;
  double secs = 0;
  bool all = true;
  for (const auto& s : results) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      json j{{"id", c.id}, {"inputs", c.inputs}, {"checked", c.checked}, {"failed", c.failed}, {"required", c.required},
             {"verdict", c.pass() ? "pass" : "fail"}};
      if (!c.pass()) j["counterexample"] = c.counterexample ? *c.counterexample : json{{"reason", "too few instances evaluated"}};
      checks.push_back(j);
      ++total;
      passed += c.pass();
    }
    suites.push_back(json{{"name", s.name}, {"verdict", s.pass() ? "pass" : "fail"}, {"checks", checks}});
    timing[s.name] = s.seconds;
    secs += s.seconds;
    all = all && s.pass();
  }
  timing["total"] = secs;
  rep["suites"] = suites;
  rep["summary"] = json{{"checks", total}, {"passed", passed}, {"failed", total - passed}};
  rep["verdict"] = all ? "pass" : "fail";
  rep["timing"] = timing;
  return rep;
}

}  // namespace modtriple::suites
