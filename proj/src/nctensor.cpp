#include "asreg/nctensor.hpp"

#include <cctype>

namespace asreg {

namespace {

void check_degree(const Tensor& t, int degree, const char* what) {
  if (t.degree() != degree) {
    throw Error(std::string(what) + ": expected degree " + std::to_string(degree) + ", got " +
                std::to_string(t.degree()));
  }
}

}  // namespace

Tensor::Tensor(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) throw Error("tensor degree out of range");
  c_.assign(std::size_t{1} << degree, Scalar());
}

Tensor Tensor::monomial(std::string_view word, Scalar coeff) {
  Tensor t(static_cast<int>(word.size()));
  t.c_[index_of(word)] = std::move(coeff);
  return t;
}

const Scalar& Tensor::coeff(std::string_view word) const {
  if (static_cast<int>(word.size()) != degree_) throw Error("word length does not match degree");
  return c_[index_of(word)];
}

bool Tensor::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string Tensor::word_of(std::size_t idx, int degree) {
  std::string w(static_cast<std::size_t>(degree), 'x');
  for (int k = 0; k < degree; ++k) {
    if ((idx >> (degree - 1 - k)) & 1U) w[static_cast<std::size_t>(k)] = 'y';
  }
  return w;
}

std::size_t Tensor::index_of(std::string_view word) {
  std::size_t idx = 0;
  for (char ch : word) {
    if (ch != 'x' && ch != 'y') throw Error("word letters must be x or y");
    idx = (idx << 1) | (ch == 'y' ? 1U : 0U);
  }
  return idx;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_degree(o, degree_, "tensor addition");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_degree(o, degree_, "tensor subtraction");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Tensor operator*(const Scalar& s, Tensor t) {
  for (auto& c : t.c_) c *= s;
  return t;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor out(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[(i << b.degree()) | j] = a[i] * b[j];
    }
  }
  return out;
}

Tensor cyclic_phi(const Tensor& w) {
  check_degree(w, 4, "cyclic_phi");
  Tensor out(4);
  for (std::size_t idx = 0; idx < 16; ++idx) {
    // out[v1v2v3v4] = w[v2v3v4v1]
    const std::size_t src = ((idx << 1) & 0xFU) | (idx >> 3);
    out[idx] = w[src];
  }
  return out;
}

Tensor partial(const Tensor& w, Letter g) {
  if (w.degree() < 1) throw Error("partial: degree must be positive");
  Tensor out(w.degree() - 1);
  const std::size_t offset = static_cast<std::size_t>(g) << (w.degree() - 1);
  for (std::size_t u = 0; u < out.size(); ++u) out[u] = w[offset | u];
  return out;
}

Tensor apply_slotwise(const std::vector<Mat2>& maps, const Tensor& t) {
  if (static_cast<int>(maps.size()) != t.degree()) {
    throw Error("apply_slotwise: need one matrix per slot");
  }
  Tensor cur = t;
  const int d = t.degree();
  for (int slot = 0; slot < d; ++slot) {
    const Mat2& m = maps[static_cast<std::size_t>(slot)];
    if (m == Mat2::identity()) continue;
    const int shift = d - 1 - slot;
    const std::size_t bit = std::size_t{1} << shift;
    Tensor next(d);
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      if (cur[idx].is_zero()) continue;
      const int a = static_cast<int>((idx >> shift) & 1U);
      const std::size_t base = idx & ~bit;
      for (int b = 0; b < 2; ++b) {
        if (m(a, b).is_zero()) continue;
        next[base | (static_cast<std::size_t>(b) << shift)] += m(a, b) * cur[idx];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Scalar evaluate(const Tensor& f, const std::vector<ProjPoint>& points) {
  if (static_cast<int>(points.size()) != f.degree()) throw Error("evaluate: need one point per slot");
  const int d = f.degree();
  Scalar total;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx].is_zero()) continue;
    Scalar term = f[idx];
    for (int k = 0; k < d; ++k) {
      term *= points[static_cast<std::size_t>(k)].coord(static_cast<int>((idx >> (d - 1 - k)) & 1U));
    }
    total += term;
  }
  return total;
}

Scalar evaluate(const Tensor& f, const PointTriple& p) {
  check_degree(f, 3, "evaluate");
  return evaluate(f, std::vector<ProjPoint>(p.begin(), p.end()));
}

KernelDimensionError::KernelDimensionError(std::size_t rank, std::size_t kernel_dim)
    : Error("relation kernel has dimension " + std::to_string(kernel_dim) + " (evaluation rank " +
            std::to_string(rank) + "), expected 2"),
      rank_(rank),
      kernel_dim_(kernel_dim) {}

RelationSpace::RelationSpace(Tensor f1, Tensor f2) : basis_{std::move(f1), std::move(f2)} {
  check_degree(basis_[0], 3, "RelationSpace");
  check_degree(basis_[1], 3, "RelationSpace");
  Mat m(0, 8);
  m.append_row(basis_[0].coeffs());
  m.append_row(basis_[1].coeffs());
  Rref r = rref(std::move(m));
  if (r.pivots.size() != 2) throw Error("relations are linearly dependent");
  rref_ = std::move(r.form);
}

std::array<Tensor, 2> RelationSpace::rref_basis() const {
  std::array<Tensor, 2> out{Tensor(3), Tensor(3)};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 8; ++c) out[r][c] = rref_(r, c);
  }
  return out;
}

bool RelationSpace::contains(const Tensor& f) const {
  check_degree(f, 3, "RelationSpace::contains");
  Mat m = rref_;
  m.append_row(f.coeffs());
  return rank(m) == 2;
}

bool span_equal(const RelationSpace& a, const RelationSpace& b) {
  return a.rref_form() == b.rref_form();
}

Mat evaluation_matrix(const std::vector<PointTriple>& rows) {
  Mat m(0, 8);
  for (const auto& p : rows) {
    Vec row(8);
    for (std::size_t idx = 0; idx < 8; ++idx) {
      row[idx] = p[0].coord(static_cast<int>((idx >> 2) & 1U)) *
                 p[1].coord(static_cast<int>((idx >> 1) & 1U)) *
                 p[2].coord(static_cast<int>(idx & 1U));
    }
    m.append_row(row);
  }
  return m;
}

std::size_t evaluation_rank(const std::vector<PointTriple>& rows) {
  return rows.empty() ? 0 : rank(evaluation_matrix(rows));
}

RelationSpace kernel_of_evaluations(const std::vector<PointTriple>& rows) {
  std::vector<Vec> ker;
  std::size_t rk = 0;
  if (rows.empty()) {
    throw KernelDimensionError(0, 8);
  }
  const Mat m = evaluation_matrix(rows);
  ker = nullspace(m);
  rk = 8 - ker.size();
  if (ker.size() != 2) throw KernelDimensionError(rk, ker.size());
  Tensor f1(3);
  Tensor f2(3);
  for (std::size_t k = 0; k < 8; ++k) {
    f1[k] = ker[0][k];
    f2[k] = ker[1][k];
  }
  return RelationSpace(std::move(f1), std::move(f2));
}

namespace {

class TensorParser {
 public:
  TensorParser(std::string_view text, int expected) : text_(text), degree_(expected) {}

  Tensor parse() {
    skip_ws();
    if (at_end()) fail("empty tensor");
    if (text_.find_first_not_of(" \t0") == std::string_view::npos) {
      if (degree_ < 0) fail("degree of the zero tensor is unknown");
      return Tensor(degree_);
    }
    std::vector<std::pair<Scalar, std::string>> terms;
    bool first = true;
    while (!at_end()) {
      Scalar sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Scalar(-1);
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Scalar coeff(1);
      if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')) {
        coeff = parse_coeff();
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
        }
      }
      std::string word = parse_word();
      if (word.empty()) fail("term without a word");
      if (degree_ < 0) degree_ = static_cast<int>(word.size());
      if (static_cast<int>(word.size()) != degree_) fail("terms of different degree");
      terms.emplace_back(sign * coeff, std::move(word));
      first = false;
      skip_ws();
    }
    if (degree_ > Tensor::kMaxDegree) fail("degree too large");
    Tensor t(degree_);
    for (auto& [c, w] : terms) t[Tensor::index_of(w)] += c;
    return t;
  }

 private:
  Scalar parse_coeff() {
    if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      Scalar s = parse_scalar(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return s;
    }
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_scalar(text_.substr(start, pos_ - start));
  }

  std::string parse_word() {
    std::string word;
    while (!at_end() && (peek() == 'x' || peek() == 'y')) {
      const char letter = peek();
      ++pos_;
      std::size_t count = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent after '^'");
        count = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (count == 0 || count > static_cast<std::size_t>(Tensor::kMaxDegree)) fail("bad exponent");
      }
      word.append(count, letter);
      if (word.size() > static_cast<std::size_t>(Tensor::kMaxDegree)) fail("word too long");
    }
    return word;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed tensor '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  int degree_;
  std::size_t pos_ = 0;
};

std::string render_word(const std::string& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    out += w[k];
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace

Tensor parse_tensor(std::string_view text, int expected_degree) {
  return TensorParser(text, expected_degree).parse();
}

std::string render_tensor(const Tensor& t) {
  std::string out;
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    const Scalar& c = t[idx];
    if (c.is_zero()) continue;
    const std::string word = render_word(Tensor::word_of(idx, t.degree()));
    if (c.is_real()) {
      const bool neg = sgn(c.re()) < 0;
      const mpq_class mag = neg ? mpq_class(-c.re()) : c.re();
      if (neg) {
        out += '-';
      } else if (!out.empty()) {
        out += '+';
      }
      if (mag != 1 || word.empty()) out += mag.get_str() + (word.empty() ? "" : "*");
    } else {
      if (!out.empty()) out += '+';
      out += "(" + render_scalar(c) + ")" + (word.empty() ? "" : "*");
    }
    out += word;
  }
  return out.empty() ? "0" : out;
}

}  // namespace asreg
