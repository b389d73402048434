#include "asreg/classify.hpp"

#include <array>

namespace asreg {

AlgebraDescriptor::AlgebraDescriptor(Kind k, Params p) : kind(k), params(std::move(p)) {
  check_params(kind, params);
}

RelationSpace AlgebraDescriptor::relations() const {
  if (kind == Kind::T2 && params.count("beta")) return g2_relations(pair());
  return table_relations(kind, params);
}

const char* to_string(Related r) {
  switch (r) {
    case Related::True: return "true";
    case Related::False: return "false";
    case Related::Unknown: return "unknown";
    case Related::NotOverField: return "not-over-field";
  }
  return "?";
}

const char* to_string(Method m) { return m == Method::Table ? "table" : "geometric"; }

namespace {

bool same_set(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return (a == c && b == d) || (a == d && b == c);
}

Scalar ratio(const AlgebraDescriptor& d) { return param(d.params, "alpha") / param(d.params, "beta"); }

bool ratio_condition(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  const Scalar r = ratio(a);
  const Scalar s = ratio(b);
  return s == r || s == r.inverse();
}

}  // namespace

bool iso_table(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::P1: {
      const Scalar& x = param(a.params, "alpha");
      const Scalar& y = param(b.params, "alpha");
      return y == x || y == x.inverse();
    }
    case Kind::P2:
    case Kind::T2:
      return true;
    case Kind::S1: {
      const Scalar& a1 = param(a.params, "alpha");
      const Scalar& b1 = param(a.params, "beta");
      const Scalar& a2 = param(b.params, "alpha");
      const Scalar& b2 = param(b.params, "beta");
      return same_set(a2, b2, a1, b1) || same_set(a2, b2, a1.inverse(), b1.inverse());
    }
    case Kind::S2:
      return ratio_condition(a, b);
    case Kind::T1: {
      const Scalar& x = param(a.params, "beta");
      const Scalar& y = param(b.params, "beta");
      return y == x || y == Scalar(1) - x;
    }
  }
  return false;
}

bool morita_table(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  if (letter_of(a.kind) != letter_of(b.kind)) return false;
  if (letter_of(a.kind) == 'S') return ratio_condition(a, b);
  return true;
}

EquivalenceVerdict iso_table_verdict(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  EquivalenceVerdict v;
  v.method = Method::Table;
  v.related = iso_table(a, b) ? Related::True : Related::False;
  v.reason = a.kind != b.kind ? "different types" : "parameter condition";
  return v;
}

EquivalenceVerdict morita_table_verdict(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  EquivalenceVerdict v;
  v.method = Method::Table;
  v.related = morita_table(a, b) ? Related::True : Related::False;
  v.reason = letter_of(a.kind) != letter_of(b.kind) ? "different types" : "parameter condition";
  return v;
}

namespace {

std::string e_description(const GeometricPair& gp) {
  if (gp.is_type_p()) return "P1xP1";
  return std::string("C_tau1 + C_tau2, intersection ") + to_string(intersection_type(*gp.components));
}

long parity(long n) { return ((n % 2) + 2) % 2; }

}  // namespace

TypeReport distinguish_types(const GeometricPair& a, const GeometricPair& b) {
  TypeReport r;
  r.e_a = e_description(a);
  r.e_b = e_description(b);
  if (a.is_type_p() != b.is_type_p()) {
    r.obstruction = true;
    r.reason = "E is P1xP1 for one pair and a reducible divisor for the other";
    return r;
  }
  if (a.is_type_p()) {
    r.e_equivalent = Decision::Yes;
    r.reason = "both E are P1xP1";
    return r;
  }
  const Intersection ia = intersection_type(*a.components);
  const Intersection ib = intersection_type(*b.components);
  if (ia != ib) {
    r.obstruction = true;
    r.reason = std::string("components meet in ") + to_string(ia) + " vs " + to_string(ib) + " points";
    return r;
  }
  r.e_equivalent = equiv_E(*a.components, *b.components, EquivMode::Equiv);
  r.reason = r.e_equivalent == Decision::Yes ? "E equivalent" : "E not equivalent";
  return r;
}

Mat2 MoritaCertificate::term(long n) const {
  // Walk from (mu0, mu1) using mu_{k+2} = L_k mu_k R_k, or its inverse for negative n.
  Mat2 lo = mu0;
  Mat2 hi = mu1;
  long k = 0;
  while (k < n) {
    const bool even = parity(k) == 0;
    Mat2 next = (even ? l_even : l_odd) * lo * (even ? r_even : r_odd);
    lo = hi;
    hi = canonical_map(next);
    ++k;
  }
  while (k > n) {
    // mu_{k-1} = L_{k-1}^{-1} mu_{k+1} R_{k-1}^{-1}
    const bool even = parity(k - 1) == 0;
    Mat2 prev = (even ? l_even : l_odd).inverse() * hi * (even ? r_even : r_odd).inverse();
    hi = lo;
    lo = canonical_map(prev);
    --k;
  }
  return lo;
}

bool verify_iso_witness(const GeometricPair& a, const GeometricPair& b, const Mat2& tau,
                        std::size_t samples) {
  for (const auto& t : sample_triples(a, samples, 0x5eed)) {
    const ProjPoint p = act(tau, t[0]);
    const ProjPoint q = act(tau, t[1]);
    if (!on_E(b, p, q)) return false;
    const PointPair lhs = sigma_apply(b, p, q);
    if (lhs.first != act(tau, t[1]) || lhs.second != act(tau, t[2])) return false;
  }
  return true;
}

bool verify_morita_certificate(const GeometricPair& a0, const GeometricPair& b0,
                               const MoritaCertificate& cert, long span, std::size_t samples) {
  const GeometricPair& a = cert.reversed ? b0 : a0;
  const GeometricPair& b = cert.reversed ? a0 : b0;
  const auto triples = sample_triples(a, samples, 0x5eed);
  for (long n = -span; n <= span; ++n) {
    const Mat2 m0 = cert.term(n);
    const Mat2 m1 = cert.term(n + 1);
    const Mat2 m2 = cert.term(n + 2);
    for (const auto& t : triples) {
      const ProjPoint p = act(m0, t[0]);
      const ProjPoint q = act(m1, t[1]);
      if (!on_E(b, p, q)) return false;
      const PointPair lhs = sigma_apply(b, p, q);
      if (lhs.first != act(m1, t[1]) || lhs.second != act(m2, t[2])) return false;
    }
  }
  return true;
}

namespace {

EquivalenceVerdict geometric(Related r, std::string reason) {
  EquivalenceVerdict v;
  v.method = Method::Geometric;
  v.related = r;
  v.reason = std::move(reason);
  return v;
}

const Mat2& component(const PairedMaps& pm, int i) { return i == 0 ? pm.tau1 : pm.tau2; }

// Invertible elements mu * (s I + t h) of the coset of solutions of mu h mu^{-1} = h'.
std::vector<Mat2> coset_candidates(const Mat2& mu, const Mat2& h) {
  std::vector<Mat2> out;
  for (const auto& st : integer_grid(2, 3)) {
    if (st[0] == 0 && st[1] == 0) continue;
    const Mat2 z = Scalar(st[0]) * Mat2::identity() + Scalar(st[1]) * h;
    if (!z.invertible()) continue;
    out.push_back(canonical_map(mu * z));
  }
  return out;
}

// The conditions that make C(0), C(1) propagate to every n (see MoritaCertificate).
bool certificate_closes(const PairedMaps& c, const PairedMaps& d, bool flip0, bool flip1,
                        const MoritaCertificate& cert) {
  const Mat2 mu2 = cert.term(2);
  const std::array<std::pair<const Mat2*, const Mat2*>, 2> steps{
      std::pair{&cert.mu0, &cert.mu1}, std::pair{&cert.mu1, &mu2}};
  const bool flips[2] = {flip0, flip1};
  for (int n = 0; n < 2; ++n) {
    for (int i = 0; i < 2; ++i) {
      const Mat2 lhs = *steps[static_cast<std::size_t>(n)].second * component(c, i) *
                       steps[static_cast<std::size_t>(n)].first->inverse();
      if (!proj_equal(lhs, component(d, i ^ static_cast<int>(flips[n])))) return false;
    }
  }
  for (int i = 0; i < 2; ++i) {
    const Mat2& ci = component(c, i);
    const Mat2& di = component(d, i);
    if (!proj_equal(cert.r_odd * ci * cert.r_even.inverse(), ci)) return false;
    if (!proj_equal(cert.r_even * ci * cert.r_odd.inverse(), ci)) return false;
    if (!proj_equal(cert.l_odd * di * cert.l_even.inverse(), di)) return false;
    if (!proj_equal(cert.l_even * di * cert.l_odd.inverse(), di)) return false;
  }
  return true;
}

struct SequenceSearch {
  std::optional<MoritaCertificate> cert;
  bool not_over_field = false;
  bool conjugate = false;  // some mu0 satisfies the n = 0 condition
};

SequenceSearch search_sequence(const GeometricPair& a, const GeometricPair& b) {
  SequenceSearch out;
  const PairedMaps& c = *a.components;
  const PairedMaps& d = *b.components;
  const bool alternates = fixes_components(a.kind) != fixes_components(b.kind);
  const Mat2 c1_inv = c.tau1.inverse();
  const Mat2 h = c1_inv * c.tau2;
  for (bool flip0 : {false, true}) {
    const bool flip1 = flip0 != alternates;
    const Mat2& d0 = component(d, flip0 ? 1 : 0);
    const Mat2& d1 = component(d, flip1 ? 1 : 0);
    const Mat2 hp = d0.inverse() * component(d, flip0 ? 0 : 1);
    const PairSimilarity sim = map_similar(hp, h);
    if (sim.status == PairSimilarity::Status::NotOverField) out.not_over_field = true;
    if (sim.status != PairSimilarity::Status::Found) continue;
    out.conjugate = true;
    for (const Mat2& mu0 : coset_candidates(*sim.witness, h)) {
      const Mat2 mu1 = canonical_map(d0 * mu0 * c1_inv);
      const Mat2 mu2 = canonical_map(d1 * mu1 * c1_inv);
      const Mat2 mu3 = canonical_map(d0 * mu2 * c1_inv);
      const Mat2 r = c1_inv * c1_inv;
      const std::array<MoritaCertificate, 3> schemes{
          MoritaCertificate{mu0, mu1, d1 * d0, d0 * d1, r, r, false},
          MoritaCertificate{mu0, mu1, mu2 * mu0.inverse(), mu3 * mu1.inverse(), Mat2::identity(),
                            Mat2::identity(), false},
          MoritaCertificate{mu0, mu1, Mat2::identity(), Mat2::identity(), mu0.inverse() * mu2,
                            mu1.inverse() * mu3, false}};
      for (const auto& cert : schemes) {
        if (certificate_closes(c, d, flip0, flip1, cert) && verify_morita_certificate(a, b, cert)) {
          out.cert = cert;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

EquivalenceVerdict iso_geometric(const GeometricPair& a, const GeometricPair& b) {
  const TypeReport types = distinguish_types(a, b);
  if (types.obstruction) return geometric(Related::False, types.reason);
  if (a.is_type_p()) {
    // E = P1xP1 is preserved by every tau x tau; the diagram asks tau tau_a tau^{-1} = tau_b.
    const PairSimilarity sim = map_similar(b.tau, a.tau);
    if (sim.status == PairSimilarity::Status::NotOverField) {
      return geometric(Related::NotOverField, "witness needs a square root outside Q(i)");
    }
    if (sim.status == PairSimilarity::Status::None) {
      return geometric(Related::False, "tau and tau' are not conjugate in PGL2");
    }
    if (!verify_iso_witness(a, b, *sim.witness)) return geometric(Related::Unknown, "witness failed verification");
    EquivalenceVerdict v = geometric(Related::True, "conjugating automorphism found");
    v.witness = *sim.witness;
    return v;
  }
  if (fixes_components(a.kind) != fixes_components(b.kind)) {
    return geometric(Related::False, "sigma fixes the components for one pair and switches them for the other");
  }
  bool nof = false;
  for (const PairedMaps& target : {*b.components, b.components->swapped()}) {
    const PairSimilarity sim = pair_similar(target, *a.components);
    if (sim.status == PairSimilarity::Status::NotOverField) nof = true;
    if (sim.status != PairSimilarity::Status::Found) continue;
    if (!verify_iso_witness(a, b, *sim.witness)) continue;
    EquivalenceVerdict v = geometric(Related::True, "E is 2-equivalent with compatible sigma");
    v.witness = *sim.witness;
    return v;
  }
  if (nof) return geometric(Related::NotOverField, "witness needs a square root outside Q(i)");
  return geometric(Related::False, "E and E' are not 2-equivalent");
}

EquivalenceVerdict morita_geometric(const GeometricPair& a, const GeometricPair& b) {
  const TypeReport types = distinguish_types(a, b);
  if (types.obstruction) return geometric(Related::False, types.reason);
  if (a.is_type_p()) {
    // tau_{n+2} = tau_b tau_n tau_a^{-1} solves the diagrams for any tau_0, tau_1.
    const Mat2 r = a.tau.inverse();
    MoritaCertificate cert{Mat2::identity(), Mat2::identity(), b.tau, b.tau, r, r, false};
    if (!verify_morita_certificate(a, b, cert)) return geometric(Related::Unknown, "sequence failed verification");
    EquivalenceVerdict v = geometric(Related::True, "twisting sequence found");
    v.witness = cert;
    return v;
  }
  if (types.e_equivalent == Decision::No) return geometric(Related::False, "E and E' are not equivalent");
  SequenceSearch forward = search_sequence(a, b);
  if (!forward.cert) {
    SequenceSearch backward = search_sequence(b, a);
    if (backward.cert) {
      backward.cert->reversed = true;
      forward.cert = backward.cert;
    }
    forward.not_over_field = forward.not_over_field || backward.not_over_field;
    forward.conjugate = forward.conjugate || backward.conjugate;
  }
  if (forward.cert) {
    EquivalenceVerdict v = geometric(Related::True, "twisting sequence found");
    v.witness = *forward.cert;
    return v;
  }
  if (forward.not_over_field) return geometric(Related::NotOverField, "sequence needs a square root outside Q(i)");
  if (!forward.conjugate) return geometric(Related::False, "no automorphism carries E to E' compatibly with sigma");
  return geometric(Related::Unknown, "no certified sequence found");
}

EquivalenceVerdict iso_geometric(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  return iso_geometric(a.pair(), b.pair());
}

EquivalenceVerdict morita_geometric(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  return morita_geometric(a.pair(), b.pair());
}

}  // namespace asreg
