#include <algorithm>

#include "invcurve/error.hpp"
#include "invcurve/ideals/ideals.hpp"

namespace invcurve::ideals {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < 3; ++v)
    if (a.e[v] != 0 && b.e[v] != 0) return false;
  return true;
}

bool less(const Monomial& a, const Monomial& b) { return poly::grevlex(a, b) < 0; }

// Reduces the leading term of f until it is irreducible; the tail is left alone.
MPoly top_reduce(MPoly f, const std::vector<MPoly>& polys, const std::vector<std::size_t>& active) {
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const MPoly* divisor = nullptr;
    for (std::size_t k : active)
      if (polys[k].leading_monomial().divides(lm)) {
        divisor = &polys[k];
        break;
      }
    if (!divisor) break;
    f -= divisor->times_monomial(divisor->leading_monomial().quotient_of(lm)).scaled(f.leading_coefficient());
  }
  return f;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(std::uint64_t budget) : budget_(budget) {}

  GroebnerBasis run(std::vector<MPoly> generators) {
    GroebnerBasis out;
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      MPoly h = top_reduce(g.monic(), polys_, active_);
      if (!h.is_zero() && insert(h.monic())) return unit(out);
    }
    while (!pairs_.empty()) {
      if (reductions_ >= budget_) {
        out.reductions = reductions_;
        for (std::size_t k : active_) out.basis.push_back(polys_[k]);
        return out;
      }
      auto it = std::min_element(pairs_.begin(), pairs_.end(),
                                 [](const Pair& a, const Pair& b) { return less(a.lcm, b.lcm); });
      const Pair pr = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      ++reductions_;
      const MPoly& a = polys_[pr.i];
      const MPoly& b = polys_[pr.j];
      MPoly s = a.times_monomial(a.leading_monomial().quotient_of(pr.lcm)) -
                b.times_monomial(b.leading_monomial().quotient_of(pr.lcm));
      MPoly h = top_reduce(std::move(s), polys_, active_);
      if (h.is_zero()) continue;
      if (insert(h.monic())) return unit(out);
    }
    out.complete = true;
    out.reductions = reductions_;
    out.basis = interreduce();
    return out;
  }

 private:
  GroebnerBasis unit(GroebnerBasis& out) {
    out.complete = true;
    out.reductions = reductions_;
    out.basis = {MPoly(arith::FieldElement(polys_.back().field(), 1L))};
    return out;
  }

  // Gebauer-Moeller update. Returns true when h is a nonzero constant.
  bool insert(MPoly h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    if (lh.degree() == 0) return true;

    std::vector<Pair> c;
    for (std::size_t g : active_) c.push_back({g, hi, polys_[g].leading_monomial().lcm(lh)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = polys_[p.i].leading_monomial().lcm(lh);
      const Monomial lj = polys_[p.j].leading_monomial().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const Pair& p : d)
      if (!coprime(polys_[p.i].leading_monomial(), lh)) pairs_.push_back(p);
    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].leading_monomial()); });
    active_.push_back(hi);
    return false;
  }

  std::vector<MPoly> interreduce() const {
    std::vector<MPoly> g;
    for (std::size_t k : active_) g.push_back(polys_[k]);
    std::sort(g.begin(), g.end(),
              [](const MPoly& a, const MPoly& b) { return less(b.leading_monomial(), a.leading_monomial()); });
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<MPoly> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(g[l]);
      g[k] = normal_form(g[k], others).monic();
    }
    return g;
  }

  std::uint64_t budget_;
  std::uint64_t reductions_ = 0;
  std::vector<MPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& divisors) {
  MPoly p = f;
  std::vector<std::pair<Monomial, arith::FieldElement>> rest;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const MPoly* divisor = nullptr;
    for (const auto& d : divisors)
      if (!d.is_zero() && d.leading_monomial().divides(lm)) {
        divisor = &d;
        break;
      }
    const arith::FieldElement lc = p.leading_coefficient();
    if (divisor) {
      p -= divisor->times_monomial(divisor->leading_monomial().quotient_of(lm))
               .scaled(lc / divisor->leading_coefficient());
    } else {
      rest.emplace_back(lm, lc);
      p -= MPoly::term(lm, lc);
    }
  }
  return MPoly::from_terms(f.field(), rest);
}

GroebnerBasis buchberger(std::vector<MPoly> generators, std::uint64_t budget) {
  if (generators.empty()) throw Error("buchberger: no generators");
  for (const auto& g : generators)
    if (&g.field() != &generators.front().field()) throw FieldMismatch("buchberger generators");
  GroebnerBasis out = Buchberger(budget).run(std::move(generators));
  return out;
}

}  // namespace invcurve::ideals
