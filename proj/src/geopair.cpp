#include "asreg/geopair.hpp"

#include <algorithm>

namespace asreg {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::P1: return "P1";
    case Kind::P2: return "P2";
    case Kind::S1: return "S1";
    case Kind::S2: return "S2";
    case Kind::T1: return "T1";
    case Kind::T2: return "T2";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  for (Kind k : kAllKinds) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

char letter_of(Kind k) { return to_string(k)[0]; }

bool fixes_components(Kind k) { return to_string(k)[1] == '1'; }

const Scalar& param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw SideConditionError("missing parameter '" + name + "'");
  return it->second;
}

void check_params(Kind kind, const Params& params) {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  switch (kind) {
    case Kind::P1: required = {"alpha"}; break;
    case Kind::P2: break;
    case Kind::S1:
    case Kind::S2: required = {"alpha", "beta"}; break;
    case Kind::T1: required = {"beta"}; break;
    case Kind::T2: optional = {"beta"}; break;
  }
  for (const auto& name : required) param(params, name);
  for (const auto& [name, value] : params) {
    const bool known = std::find(required.begin(), required.end(), name) != required.end() ||
                       std::find(optional.begin(), optional.end(), name) != optional.end();
    if (!known) {
      throw SideConditionError(std::string("unexpected parameter '") + name + "' for " + to_string(kind));
    }
  }
  if (kind == Kind::P1 && param(params, "alpha").is_zero()) {
    throw SideConditionError("P1 side condition violated: α ≠ 0");
  }
  if (kind == Kind::S1 || kind == Kind::S2) {
    const Scalar& a = param(params, "alpha");
    const Scalar& b = param(params, "beta");
    if ((a * b).is_zero() || a * a == b * b) {
      throw SideConditionError(std::string(to_string(kind)) + " side condition violated: αβ ≠ 0, α² ≠ β²");
    }
  }
}

GeometricPair make_geometric_pair(Kind kind, const Params& params) {
  check_params(kind, params);
  GeometricPair gp{kind, params, Mat2::identity(), std::nullopt};
  switch (kind) {
    case Kind::P1:
      gp.tau = Mat2::diag(1, param(params, "alpha"));
      break;
    case Kind::P2:
      gp.tau = Mat2(1, 1, 0, 1);
      break;
    case Kind::S1:
      gp.components = PairedMaps{Mat2::diag(-param(params, "alpha"), 1),
                                 Mat2::diag(-param(params, "beta"), 1)};
      break;
    case Kind::S2:
      gp.components = PairedMaps{Mat2(0, 1, -param(params, "alpha"), 0),
                                 Mat2(0, 1, -param(params, "beta"), 0)};
      break;
    case Kind::T1: {
      const Scalar& b = param(params, "beta");
      gp.components = PairedMaps{Mat2(1, b, 0, 1), Mat2(1, b - Scalar(1), 0, 1)};
      break;
    }
    case Kind::T2:
      if (params.count("beta")) {
        const Scalar& b = param(params, "beta");
        gp.components = PairedMaps{Mat2(1, b, 0, -1), Mat2(1, b - Scalar(1), 0, -1)};
      } else {
        gp.components = PairedMaps{Mat2(1, 1, 0, -1), Mat2(1, -1, 0, -1)};
      }
      break;
  }
  return gp;
}

bool on_E(const GeometricPair& gp, const ProjPoint& p, const ProjPoint& q) {
  if (gp.is_type_p()) return true;
  return q == act(gp.components->tau1, p) || q == act(gp.components->tau2, p);
}

PointPair sigma_apply(const GeometricPair& gp, const ProjPoint& p, const ProjPoint& q) {
  if (gp.is_type_p()) return {q, act(gp.tau, p)};
  const Mat2& t1 = gp.components->tau1;
  const Mat2& t2 = gp.components->tau2;
  const bool fixes = fixes_components(gp.kind);
  if (q == act(t1, p)) return {q, act(fixes ? t1 : t2, q)};
  if (q == act(t2, p)) return {q, act(fixes ? t2 : t1, q)};
  throw Error("point is not on E");
}

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 9) + 1;
  return Scalar::rational(num, den);
}

}  // namespace

std::vector<PointTriple> sample_triples(const GeometricPair& gp, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("sample_triples: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<PointTriple> out;
  out.reserve(n);
  auto push = [&](const ProjPoint& p, const ProjPoint& q) {
    out.push_back({p, q, sigma_apply(gp, p, q).second});
  };
  if (gp.is_type_p()) {
    for (std::size_t k = 0; k < n; ++k) {
      const ProjPoint p = ProjPoint::affine(random_rational(rng));
      const ProjPoint q = ProjPoint::affine(random_rational(rng));
      push(p, q);
    }
    return out;
  }
  // Components alternate so that every prefix is balanced.
  for (std::size_t k = 0; k < n; ++k) {
    const Mat2& tau = k % 2 == 0 ? gp.components->tau1 : gp.components->tau2;
    const ProjPoint p = k < 2 ? ProjPoint::infinity() : ProjPoint::affine(random_rational(rng));
    push(p, act(tau, p));
  }
  return out;
}

RelationSpace g2_relations(const GeometricPair& gp, std::uint64_t seed) {
  constexpr std::size_t kBatch = 10;
  constexpr std::size_t kCap = 40;
  const auto all = sample_triples(gp, kCap, seed);
  std::size_t previous_rank = 0;
  std::size_t last_rank = 0;
  for (std::size_t n = kBatch; n <= kCap; n += kBatch) {
    const std::vector<PointTriple> rows(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    last_rank = evaluation_rank(rows);
    if (last_rank == 6 && previous_rank == 6) return kernel_of_evaluations(rows);
    previous_rank = last_rank;
  }
  throw KernelDimensionError(last_rank, 8 - last_rank);
}

namespace {

Tensor mono(std::string_view word, const Scalar& c = 1) { return Tensor::monomial(word, c); }

}  // namespace

std::array<Tensor, 2> table_polynomials(Kind kind, const Params& params) {
  check_params(kind, params);
  switch (kind) {
    case Kind::P1: {
      const Scalar& a = param(params, "alpha");
      return {mono("xxy") - mono("yxx", a), mono("xyy") - mono("yyx", a)};
    }
    case Kind::P2:
      return {mono("xxy") - mono("yxx") + mono("yxy"), mono("xyy") - mono("yyx") + mono("yyy")};
    case Kind::S1: {
      const Scalar& a = param(params, "alpha");
      const Scalar& b = param(params, "beta");
      return {mono("xxy", a * b) + mono("xyx", a + b) + mono("yxx"),
              mono("xyy", a * b) + mono("yxy", a + b) + mono("yyx")};
    }
    case Kind::S2: {
      const Scalar& a = param(params, "alpha");
      const Scalar& b = param(params, "beta");
      return {mono("xyy") + mono("yyx") + mono("xxx", a + b),
              mono("xxy") + mono("yxx") + mono("yyy", a.inverse() + b.inverse())};
    }
    case Kind::T1: {
      const Scalar& b = param(params, "beta");
      const Scalar c = Scalar(2) * (Scalar(2) * b - Scalar(1));
      return {mono("xxy") - mono("xyx", 2) + mono("yxx") - mono("yxy", c) + mono("xyy", c) +
                  mono("yyy", Scalar(2) * b * (b - Scalar(1))),
              mono("xyy") - mono("yxy", 2) + mono("yyx")};
    }
    case Kind::T2:
      if (params.count("beta")) throw SideConditionError("the T2 table row has no parameters");
      return {mono("xxy") + mono("xyx", 2) + mono("yxx") + mono("yyy", 2),
              mono("xyy") + mono("yxy", 2) + mono("yyx")};
  }
  throw Error("unknown kind");
}

Params random_params(Kind kind, std::mt19937_64& rng) {
  auto draw = [&rng]() {
    long num = static_cast<long>(rng() % 25) - 12;
    if (num == 0) num = 13;
    return Scalar::rational(num, static_cast<long>(rng() % 6) + 1);
  };
  switch (kind) {
    case Kind::P1: return {{"alpha", draw()}};
    case Kind::S1:
    case Kind::S2: {
      Scalar a = draw();
      Scalar b = draw();
      while (a * a == b * b) b = draw();
      return {{"alpha", a}, {"beta", b}};
    }
    case Kind::T1: return {{"beta", draw()}};
    case Kind::P2:
    case Kind::T2: return {};
  }
  return {};
}

RelationSpace table_relations(Kind kind, const Params& params) {
  auto [f1, f2] = table_polynomials(kind, params);
  return RelationSpace(std::move(f1), std::move(f2));
}

RelationSpace twist_relations(const RelationSpace& r, const Mat2& theta) {
  const Mat2 inv = theta.inverse();
  const std::vector<Mat2> maps{Mat2::identity(), inv, inv * inv};
  return RelationSpace(apply_slotwise(maps, r.basis()[0]), apply_slotwise(maps, r.basis()[1]));
}

}  // namespace asreg
