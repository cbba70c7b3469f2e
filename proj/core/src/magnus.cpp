#include "linkhom/magnus.hpp"

#include <algorithm>
#include <sstream>

namespace linkhom {

std::string to_string(const Variable& v) {
  return "X{" + std::to_string(v.color) + "," + std::to_string(v.index) + "}";
}

VariableUniverse::VariableUniverse(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (size_t i = 0; i < vars_.size(); ++i) {
    ids_[vars_[i]] = static_cast<int>(i);
    if (colors_.empty() || colors_.back() != vars_[i].color) colors_.push_back(vars_[i].color);
  }
  color_bit_.resize(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(colors_.begin(), colors_.end(), vars_[i].color);
    color_bit_[i] = static_cast<int>(it - colors_.begin());
  }
  if (colors_.size() > 63)
    throw ValidationError("too many colors for the reduced ring (limit 63)");
}

int VariableUniverse::id_of(const Variable& v) const {
  auto it = ids_.find(v);
  if (it == ids_.end())
    throw UnknownGenerator("unknown generator m" + std::to_string(v.color) + "," +
                           std::to_string(v.index));
  return it->second;
}

UniversePtr make_universe(std::vector<Variable> vars) {
  return std::make_shared<const VariableUniverse>(std::move(vars));
}

void GroupWord::push(const Variable& v, int exponent) {
  if (exponent != 1 && exponent != -1)
    throw ValidationError("word letters carry exponent +1 or -1");
  if (!letters_.empty() && letters_.back().first == v &&
      letters_.back().second == -exponent) {
    letters_.pop_back();
    return;
  }
  letters_.emplace_back(v, exponent);
}

void GroupWord::append(const GroupWord& w) {
  for (const auto& [v, e] : w.letters_) push(v, e);
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.push(it->first, -it->second);
  return r;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a.inverse();
  r.append(b.inverse());
  r.append(a);
  r.append(b);
  return r;
}

GroupWord GroupWord::conjugate(const GroupWord& a, const GroupWord& g) {
  GroupWord r = g.inverse();
  r.append(a);
  r.append(g);
  return r;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (const auto& [v, e] : letters_) {
    os << "m" << v.color << "," << v.index;
    if (e < 0) os << "^-1";
    os << " ";
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

MagnusSeries MagnusSeries::zero(UniversePtr u, int max_degree) {
  MagnusSeries s;
  s.uni_ = std::move(u);
  s.max_degree_ = max_degree < 0 ? s.uni_->color_count() : max_degree;
  return s;
}

MagnusSeries MagnusSeries::one(UniversePtr u, int max_degree) {
  MagnusSeries s = zero(std::move(u), max_degree);
  s.terms_[""] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator(UniversePtr u, const Variable& v, int max_degree) {
  MagnusSeries s = one(std::move(u), max_degree);
  if (s.max_degree_ >= 1)
    s.terms_[std::string(1, static_cast<char>(s.uni_->id_of(v)))] = 1;
  return s;
}

Int MagnusSeries::constant_term() const {
  auto it = terms_.find("");
  return it == terms_.end() ? Int(0) : it->second;
}

Int MagnusSeries::coefficient(const std::vector<Variable>& monomial) const {
  std::string key;
  for (const auto& v : monomial) key.push_back(static_cast<char>(uni_->id_of(v)));
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

bool MagnusSeries::is_one() const {
  return terms_.size() == 1 && constant_term() == 1;
}

bool MagnusSeries::monomial_ok(const std::string& m) const {
  if (static_cast<int>(m.size()) > max_degree_) return false;
  uint64_t seen = 0;
  for (char c : m) {
    uint64_t bit = uint64_t{1} << uni_->color_bit(static_cast<unsigned char>(c));
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

void MagnusSeries::add_term(const std::string& monomial, const Int& coeff) {
  if (coeff == 0 || !monomial_ok(monomial)) return;
  Int& c = terms_[monomial];
  c += coeff;
  if (c == 0) terms_.erase(monomial);
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
  if (uni_ != o.uni_)
    throw ValidationError("series multiplied across different variable universes");
  MagnusSeries r = zero(uni_, std::min(max_degree_, o.max_degree_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma + mb, ca * cb);
    }
  }
  return r;
}

MagnusSeries MagnusSeries::operator+(const MagnusSeries& o) const {
  MagnusSeries r = *this;
  r.max_degree_ = std::min(max_degree_, o.max_degree_);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& o) const {
  MagnusSeries r = *this;
  r.max_degree_ = std::min(max_degree_, o.max_degree_);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MagnusSeries MagnusSeries::inverse() const {
  if (constant_term() != 1)
    throw NotInvertible("series inverse requires constant term 1");
  // (1+u)^-1 = 1 - u + u^2 - ...; u is nilpotent of order <= max_degree+1.
  MagnusSeries u = *this;
  u.terms_.erase("");
  MagnusSeries acc = one(uni_, max_degree_);
  MagnusSeries pow = one(uni_, max_degree_);
  for (int k = 1; k <= max_degree_; ++k) {
    pow = pow * u;
    if (pow.terms_.empty()) break;
    if (k % 2 == 1)
      acc = acc - pow;
    else
      acc = acc + pow;
  }
  return acc;
}

MagnusSeries MagnusSeries::without_color(int color) const {
  MagnusSeries r = zero(uni_, max_degree_);
  for (const auto& [m, c] : terms_) {
    bool has = false;
    for (char ch : m)
      if (uni_->color_of(static_cast<unsigned char>(ch)) == color) {
        has = true;
        break;
      }
    if (!has) r.terms_[m] = c;
  }
  return r;
}

std::optional<int> MagnusSeries::min_degree_nonconstant() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) continue;
    int d = static_cast<int>(m.size());
    if (!best || d < *best) best = d;
  }
  return best;
}

std::string MagnusSeries::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::string, Int>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool show_coeff = (a != 1) || m.empty();
    if (show_coeff) os << a.str();
    if (show_coeff && !m.empty()) os << "*";
    for (char ch : m) os << to_string(uni_->var(static_cast<unsigned char>(ch)));
  }
  return os.str();
}

MagnusSeries expand(const GroupWord& w, UniversePtr u, int max_degree) {
  MagnusSeries r = MagnusSeries::one(u, max_degree);
  for (const auto& [v, e] : w.letters()) {
    MagnusSeries g = MagnusSeries::generator(u, v, max_degree);
    r = r * (e > 0 ? g : g.inverse());
  }
  return r;
}

MagnusSeries commutator_series(const MagnusSeries& a, const MagnusSeries& b) {
  return a.inverse() * b.inverse() * a * b;
}

MagnusSeries conjugate_series(const MagnusSeries& a, const MagnusSeries& g) {
  return g.inverse() * a * g;
}

std::optional<int> lowest_degree_with_color(const MagnusSeries& s, int color) {
  const auto& uni = *s.universe();
  std::optional<int> best;
  for (const auto& [m, c] : s.terms()) {
    for (char ch : m) {
      if (uni.color_of(static_cast<unsigned char>(ch)) == color) {
        int d = static_cast<int>(m.size());
        if (!best || d < *best) best = d;
        break;
      }
    }
  }
  return best;
}

}  // namespace linkhom
