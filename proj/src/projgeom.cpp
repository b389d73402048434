#include "asreg/projgeom.hpp"

namespace asreg {

ProjPoint::ProjPoint(Scalar a, Scalar b) {
  if (!a.is_zero()) {
    b_ = b / a;
    a_ = 1;
  } else if (!b.is_zero()) {
    a_ = 0;
    b_ = 1;
  } else {
    throw Error("(0:0) is not a point of P^1");
  }
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << "(" << p.a() << ":" << p.b() << ")";
}

Mat2 canonical_map(const Mat2& m) {
  if (!m.invertible()) throw Error("singular matrix is not in PGL2");
  for (const auto& e : m.entries()) {
    if (!e.is_zero()) return e.inverse() * m;
  }
  return m;
}

ProjPoint act(const Mat2& m, const ProjPoint& p) {
  return {m(0, 0) * p.a() + m(0, 1) * p.b(), m(1, 0) * p.a() + m(1, 1) * p.b()};
}

PointPair swap_nu(const ProjPoint& p, const ProjPoint& q) { return {q, p}; }

const char* to_string(Intersection t) {
  switch (t) {
    case Intersection::Two: return "Two";
    case Intersection::One: return "One";
    case Intersection::Infinite: return "Infinite";
  }
  return "?";
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::NotOverField: return "not-over-field";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

Scalar j_invariant(const Mat2& m) {
  const Scalar t = m.trace();
  return t * t / m.det();
}

Intersection intersection_type(const PairedMaps& pm) {
  const Mat2 g = pm.tau2.inverse() * pm.tau1;
  if (g.is_scalar()) return Intersection::Infinite;
  if (j_invariant(g) == Scalar(4)) return Intersection::One;
  return Intersection::Two;
}

IntersectionPoints intersection_points(const PairedMaps& pm) {
  const Mat2 g = pm.tau2.inverse() * pm.tau1;
  if (g.is_scalar()) throw Error("graphs coincide: infinitely many intersection points");
  const Scalar tr = g.trace();
  const Scalar disc = tr * tr - Scalar(4) * g.det();
  auto root = sqrt_exact(disc);
  if (!root) return NotOverField{};
  std::vector<Scalar> eigenvalues{(tr + *root) / Scalar(2)};
  if (!root->is_zero()) eigenvalues.push_back((tr - *root) / Scalar(2));
  std::vector<PointPair> out;
  for (const auto& e : eigenvalues) {
    // A nonscalar g has one-dimensional eigenspaces; take the kernel row of g - e.
    const Scalar a = g(0, 0) - e;
    const Scalar b = g(0, 1);
    const ProjPoint p = (!a.is_zero() || !b.is_zero()) ? ProjPoint(b, -a)
                                                       : ProjPoint(g(1, 1) - e, -g(1, 0));
    out.emplace_back(p, act(pm.tau1, p));
  }
  return out;
}

bool proj_similar(const Mat2& m, const Mat2& n) {
  if (m.is_scalar() || n.is_scalar()) return m.is_scalar() && n.is_scalar();
  return j_invariant(m) == j_invariant(n);
}

namespace {

struct LambdaCandidates {
  std::vector<Scalar> values;
  bool not_over_field = false;
};

// lambda with q = lambda * mu^{-1} p mu: det q = lambda^2 det p, tr q = lambda tr p.
LambdaCandidates lambda_candidates(const Mat2& p, const Mat2& q) {
  LambdaCandidates out;
  const Scalar tp = p.trace();
  const Scalar tq = q.trace();
  if (!tp.is_zero()) {
    const Scalar l = tq / tp;
    if (!l.is_zero() && l * l * p.det() == q.det()) out.values.push_back(l);
    return out;
  }
  if (!tq.is_zero()) return out;
  auto s = sqrt_exact(q.det() / p.det());
  if (!s) {
    out.not_over_field = true;
    return out;
  }
  out.values.push_back(*s);
  out.values.push_back(-*s);
  return out;
}

std::optional<Mat2> invertible_in_span(const std::vector<Vec>& basis) {
  if (basis.empty()) return std::nullopt;
  for (const auto& pt : integer_grid(basis.size(), 3)) {
    Vec v(4);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (pt[k] == 0) continue;
      for (std::size_t e = 0; e < 4; ++e) v[e] += Scalar(pt[k]) * basis[k][e];
    }
    Mat2 mu(v[0], v[1], v[2], v[3]);
    if (mu.invertible()) return canonical_map(mu);
  }
  return std::nullopt;
}

PairSimilarity similar_all(const std::vector<Mat2>& ps, const std::vector<Mat2>& qs) {
  std::vector<LambdaCandidates> cands;
  bool not_over_field = false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    cands.push_back(lambda_candidates(ps[i], qs[i]));
    if (cands.back().not_over_field) {
      not_over_field = true;
    } else if (cands.back().values.empty()) {
      return {PairSimilarity::Status::None, std::nullopt};
    }
  }
  if (not_over_field) return {PairSimilarity::Status::NotOverField, std::nullopt};

  std::vector<std::size_t> choice(ps.size(), 0);
  while (true) {
    // Unknown mu is row-major (m00, m01, m10, m11); equations mu q_i - l_i p_i mu = 0.
    Mat sys(0, 4);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Scalar& l = cands[i].values[choice[i]];
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          Vec row(4);
          for (int k = 0; k < 2; ++k) {
            row[static_cast<std::size_t>(2 * r + k)] += qs[i](k, c);
            row[static_cast<std::size_t>(2 * k + c)] -= l * ps[i](r, k);
          }
          sys.append_row(row);
        }
      }
    }
    if (auto mu = invertible_in_span(nullspace(sys))) {
      return {PairSimilarity::Status::Found, mu};
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == cands[k].values.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return {PairSimilarity::Status::None, std::nullopt};
}

}  // namespace

PairSimilarity pair_similar(const PairedMaps& p, const PairedMaps& q) {
  return similar_all({p.tau1, p.tau2}, {q.tau1, q.tau2});
}

PairSimilarity map_similar(const Mat2& p, const Mat2& q) { return similar_all({p}, {q}); }

Decision equiv_E(const PairedMaps& p, const PairedMaps& q, EquivMode mode) {
  if (mode == EquivMode::Equiv) {
    const Mat2 g = p.tau2.inverse() * p.tau1;
    const Mat2 h = q.tau2.inverse() * q.tau1;
    return proj_similar(h, g) || proj_similar(h, g.inverse()) ? Decision::Yes : Decision::No;
  }
  bool nof = false;
  for (const PairedMaps& target : {p, p.swapped()}) {
    const auto res = pair_similar(target, q);
    if (res.status == PairSimilarity::Status::Found) return Decision::Yes;
    nof = nof || res.status == PairSimilarity::Status::NotOverField;
  }
  return nof ? Decision::NotOverField : Decision::No;
}

}  // namespace asreg
