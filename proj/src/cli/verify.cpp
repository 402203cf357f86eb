#include "invcurve/cli/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "invcurve/error.hpp"

namespace invcurve::cli {

using groups::GroupId;
using inv::Coords;
using poly::Monomial;
using poly::MPoly;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

const char* kFamilies[] = {"degrees",     "invariance", "zero-locus", "nonsingular",
                           "transversal", "x-squared",  "jacobian",   "wiman-sextic"};

Status from_verdict(ideals::Verdict v) {
  switch (v) {
    case ideals::Verdict::True: return Status::Pass;
    case ideals::Verdict::False: return Status::Fail;
    case ideals::Verdict::Inconclusive: return Status::Inconclusive;
  }
  return Status::Inconclusive;
}

CheckOutcome from_check(std::string name, const ideals::CheckResult& r) {
  std::string detail = r.method;
  if (!r.detail.empty()) detail += ": " + r.detail;
  return {std::move(name), from_verdict(r.verdict), detail};
}

using Task = std::function<CheckOutcome()>;

// Coefficients of the Wiman sextic as printed: 10x^3y^3 + 9x^5z + 9y^5z - 45x^2y^2z^2 - 135xyz^4 + 27z^6.
const std::pair<Monomial, long> kPrintedWiman[] = {
    {Monomial(3, 3, 0), 10}, {Monomial(5, 0, 1), 9},     {Monomial(0, 5, 1), 9},
    {Monomial(2, 2, 2), -45}, {Monomial(1, 1, 4), -135}, {Monomial(0, 0, 6), 27},
};

CheckOutcome check_wiman(const MPoly& w, const std::string& name) {
  if (w.num_terms() != std::size(kPrintedWiman))
    return {name, Status::Fail, std::to_string(w.num_terms()) + " terms"};
  for (const auto& [m, c] : kPrintedWiman)
    if (w.coefficient(m) != arith::FieldElement(w.field(), c))
      return {name, Status::Fail, "coefficient of " + m.to_string() + " is " + w.coefficient(m).to_string()};
  return {name, Status::Pass, "6 printed coefficients"};
}

void expand(const std::string& family, GroupId g, Coords c, const VerifyOptions& opt, std::vector<Task>& tasks) {
  const auto* t = &inv::cached(g, c);
  const bool heavy_v = g == GroupId::V && !opt.deep;
  ideals::Options io;
  io.budget = opt.budget;
  // Exact Groebner fallbacks are out of reach for the Valentiner degrees.
  io.exact = g != GroupId::V || opt.deep;
  const char* names[] = {"F", "Phi", "Psi", "X"};

  if (family == "degrees") {
    tasks.push_back([t] {
      const auto& p = t->degrees();
      const unsigned want[] = {p.a, p.b, p.c, p.x};
      std::string got;
      bool ok = true;
      for (int k = 0; k < 4; ++k) {
        const auto d = t->polys()[k]->homogeneous_degree();
        ok = ok && d && *d == want[k];
        got += (k ? "/" : "") + (d ? std::to_string(*d) : std::string("?"));
      }
      return CheckOutcome{"degrees", ok ? Status::Pass : Status::Fail, got};
    });
  } else if (family == "invariance") {
    if (c != Coords::Standard) {
      tasks.push_back([] {
        return CheckOutcome{"invariance", Status::Inconclusive, "generators are only available in the standard frame"};
      });
      return;
    }
    for (int k = 0; k < 4; ++k)
      tasks.push_back([t, g, k, n = std::string(names[k])] {
        const bool ok = inv::is_invariant(*t->polys()[k], groups::generators(g));
        return CheckOutcome{"invariance " + n, ok ? Status::Pass : Status::Fail, "all generators"};
      });
  } else if (family == "zero-locus") {
    tasks.push_back([t, io] { return from_check("zero-locus", ideals::only_trivial_zero({t->F, t->Phi, t->Psi}, io)); });
  } else if (family == "nonsingular") {
    for (int k = 0; k < 3; ++k) {
      const std::string name = std::string("nonsingular ") + names[k];
      if (heavy_v && k == 2) {
        tasks.push_back([name] { return CheckOutcome{name, Status::Inconclusive, "requires --deep"}; });
        continue;
      }
      tasks.push_back([t, k, io, name] { return from_check(name, ideals::nonsingular_check(*t->polys()[k], io)); });
    }
  } else if (family == "transversal") {
    tasks.push_back([t, io] { return from_check("transversal F Phi", ideals::transversal_check(t->F, t->Phi, io)); });
  } else if (family == "x-squared") {
    if (heavy_v && c == Coords::Standard) {
      tasks.push_back([] { return CheckOutcome{"x-squared", Status::Inconclusive, "requires --deep"}; });
      return;
    }
    tasks.push_back([t] {
      const MPoly sq = t->X * t->X;
      const auto e = inv::express_in_basic(sq, *t);
      if (!e.ok()) return CheckOutcome{"x-squared", Status::Fail, e.message};
      const bool same = inv::recombine(e, *t) == sq;
      return CheckOutcome{"x-squared", same ? Status::Pass : Status::Fail,
                          std::to_string(e.basis.size()) + " basis monomials in degree " + std::to_string(e.degree)};
    });
  } else if (family == "jacobian") {
    if (g != GroupId::I || c != Coords::Wiman) return;
    tasks.push_back([t] {
      const auto& f = t->field();
      const auto v = t->X.evaluate({arith::FieldElement(f, 1L), arith::FieldElement(f, 0L), arith::FieldElement(f, 0L)});
      const bool ok = v == arith::FieldElement(f, 7290L);
      return CheckOutcome{"jacobian-at-(1,0,0) = 7290", ok ? Status::Pass : Status::Fail, "value " + v.to_string()};
    });
  } else if (family == "wiman-sextic") {
    if (c != Coords::Wiman) return;
    tasks.push_back([t, g] { return check_wiman(g == GroupId::V ? t->F : t->Phi, "wiman-sextic"); });
  } else {
    throw Error("unknown check: " + family);
  }
}

}  // namespace

bool known_check(const std::string& name) {
  for (const char* f : kFamilies)
    if (name == f) return true;
  return false;
}

std::vector<std::string> default_checks(GroupId g, Coords c) {
  std::vector<std::string> out{"degrees"};
  if (c == Coords::Standard) out.push_back("invariance");
  out.insert(out.end(), {"zero-locus", "nonsingular", "transversal", "x-squared"});
  if (g == GroupId::I && c == Coords::Wiman) out.push_back("jacobian");
  if (c == Coords::Wiman) out.push_back("wiman-sextic");
  return out;
}

std::vector<CheckOutcome> verify(GroupId g, Coords c, const std::vector<std::string>& checks,
                                 const VerifyOptions& options) {
  std::vector<Task> tasks;
  std::vector<std::string> family_of;
  for (const auto& family : checks) {
    expand(family, g, c, options, tasks);
    family_of.resize(tasks.size(), family);
  }
  std::vector<CheckOutcome> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        out[i] = tasks[i]();
      } catch (const Error& e) {
        out[i] = {family_of[i], Status::Fail, std::string("error: ") + e.what()};
      }
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.threads, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace invcurve::cli
