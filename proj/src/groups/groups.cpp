#include "invcurve/groups/groups.hpp"

#include <deque>
#include <map>
#include <tuple>
#include <unordered_set>

#include "invcurve/arith/constants.hpp"
#include "invcurve/error.hpp"

namespace invcurve::groups {

using arith::Rational;

GroupId parse_group(std::string_view name) {
  if (name == "V") return GroupId::V;
  if (name == "I") return GroupId::I;
  if (name == "K") return GroupId::K;
  throw Error("unknown group '" + std::string(name) + "' (expected V, I or K)");
}

const char* group_name(GroupId g) {
  switch (g) {
    case GroupId::V:
      return "V";
    case GroupId::I:
      return "I";
    case GroupId::K:
      return "K";
  }
  return "?";
}

const DegreeProfile& degree_profile(GroupId g) {
  static const DegreeProfile v{6, 12, 30, 45, 360, 1080};
  static const DegreeProfile i{2, 6, 10, 15, 60, 60};
  static const DegreeProfile k{4, 6, 14, 21, 168, 168};
  switch (g) {
    case GroupId::V:
      return v;
    case GroupId::I:
      return i;
    case GroupId::K:
      return k;
  }
  return v;
}

const Matrix3& GeneratorSet::by_name(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return matrices[i];
  }
  throw Error("no generator named '" + std::string(name) + "'");
}

namespace {

Matrix3 from_rows(const NumberField& f, std::initializer_list<FieldElement> entries) {
  return Matrix3(f, std::vector<FieldElement>(entries));
}

GeneratorSet icosahedral_family(GroupId g) {
  const NumberField& f = NumberField::cyclotomic15();
  const auto c = arith::embed_constants(arith::Frame::V);
  const FieldElement& rho = c.at("rho");
  const FieldElement& tau = c.at("tau");
  const FieldElement zero(f), one(f, 1L), minus_one(f, -1L);
  const FieldElement tau_inv = tau.inverse();

  GeneratorSet out{g, {}, {}};
  out.names.push_back("Z");
  out.matrices.push_back(from_rows(f, {minus_one, zero, zero, zero, one, zero, zero, zero, minus_one}));
  out.names.push_back("T");
  out.matrices.push_back(from_rows(f, {zero, zero, one, one, zero, zero, zero, one, zero}));
  if (g == GroupId::V) {
    out.names.push_back("Q");
    out.matrices.push_back(from_rows(f, {one, zero, zero, zero, zero, rho * rho, zero, -rho, zero}));
  }
  out.names.push_back("P");
  out.matrices.push_back(from_rows(f, {one, tau_inv, -tau, tau_inv, tau, one, tau, minus_one, tau_inv})
                             .scaled(FieldElement(f, Rational(1, 2))));
  return out;
}

GeneratorSet klein() {
  const NumberField& f = NumberField::cyclotomic7();
  const auto c = arith::embed_constants(arith::Frame::K);
  const FieldElement& z = c.at("zeta");
  const FieldElement zero(f), one(f, 1L);
  auto zp = [&](int k) { return z.pow(k); };

  GeneratorSet out{GroupId::K, {}, {}};
  out.names.push_back("S");
  out.matrices.push_back(from_rows(f, {zp(4), zero, zero, zero, zp(2), zero, zero, zero, zp(1)}));
  out.names.push_back("T");
  out.matrices.push_back(from_rows(f, {zero, zero, one, one, zero, zero, zero, one, zero}));
  const FieldElement a = zp(1) - zp(6), b = zp(2) - zp(5), d = zp(4) - zp(3);
  out.names.push_back("R");
  out.matrices.push_back(from_rows(f, {a, b, d, b, d, a, d, a, b}).scaled(-c.at("sqrt-7").inverse()));
  return out;
}

}  // namespace

GeneratorSet generators(GroupId g) { return g == GroupId::K ? klein() : icosahedral_family(g); }

MatrixGroup::MatrixGroup(GroupId group, std::vector<Matrix3> elements)
    : group_(group), elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("a matrix group needs at least one element");
}

bool MatrixGroup::contains(const Matrix3& m) const {
  for (const Matrix3& e : elements_) {
    if (e == m) return true;
  }
  return false;
}

MatrixGroup closure(const GeneratorSet& gens, std::size_t cap) {
  if (gens.matrices.empty()) throw Error("empty generator set");
  const Matrix3 id = Matrix3::identity(gens.field());
  std::unordered_set<Matrix3> seen{id};
  std::vector<Matrix3> elements{id};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Matrix3 current = elements[queue.front()];
    queue.pop_front();
    for (const Matrix3& g : gens.matrices) {
      Matrix3 next = current * g;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw Error("group closure exceeded " + std::to_string(cap) + " elements; generators are likely wrong");
        }
        elements.push_back(std::move(next));
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return MatrixGroup(gens.group, std::move(elements));
}

std::size_t projective_order(const std::vector<Matrix3>& elements) {
  std::unordered_set<Matrix3> classes;
  for (const Matrix3& m : elements) classes.insert(m.projective_normal_form());
  return classes.size();
}

std::vector<long> molien_series(const MatrixGroup& g, unsigned n) {
  const NumberField& f = g.field();
  // det(I - tA) = 1 - e1 t + e2 t^2 - e3 t^3 depends only on (e1, e2, e3).
  struct Key {
    FieldElement e1, e2, e3;
  };
  std::vector<std::pair<Key, long>> classes;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
  for (const Matrix3& m : g.elements()) {
    FieldElement e2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                      m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Key key{m.trace(), std::move(e2), m.det()};
    auto& bucket = buckets[{key.e1.hash(), key.e2.hash(), key.e3.hash()}];
    bool found = false;
    for (std::size_t idx : bucket) {
      Key& k = classes[idx].first;
      if (k.e1 == key.e1 && k.e2 == key.e2 && k.e3 == key.e3) {
        ++classes[idx].second;
        found = true;
        break;
      }
    }
    if (!found) {
      bucket.push_back(classes.size());
      classes.emplace_back(std::move(key), 1);
    }
  }

  std::vector<FieldElement> total(n + 1, FieldElement(f));
  for (const auto& [key, count] : classes) {
    std::vector<FieldElement> s;
    s.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      FieldElement v(f, k == 0 ? 1L : 0L);
      if (k >= 1) v += key.e1 * s[k - 1];
      if (k >= 2) v -= key.e2 * s[k - 2];
      if (k >= 3) v += key.e3 * s[k - 3];
      s.push_back(std::move(v));
    }
    const FieldElement weight(f, count);
    for (unsigned k = 0; k <= n; ++k) total[k] += weight * s[k];
  }

  std::vector<long> out;
  const Rational order(static_cast<long>(g.order()));
  for (unsigned k = 0; k <= n; ++k) {
    if (!total[k].is_rational()) throw Error("Molien coefficient is not rational at degree " + std::to_string(k));
    Rational v = total[k].to_rational() / order;
    if (v.get_den() != 1 || v < 0) throw Error("Molien coefficient is not a nonnegative integer at degree " + std::to_string(k));
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::vector<long> expand_poincare(GroupId g, unsigned n) {
  const DegreeProfile& p = degree_profile(g);
  std::vector<long> s(n + 1, 0);
  s[0] = 1;
  if (2 * p.x <= n) s[2 * p.x] = -1;
  for (unsigned k : {p.a, p.b, p.c, p.x}) {
    for (unsigned i = k; i <= n; ++i) s[i] += s[i - k];
  }
  return s;
}

}  // namespace invcurve::groups
