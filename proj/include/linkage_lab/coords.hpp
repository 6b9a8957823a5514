#pragma once

#include "linkage_lab/arith.hpp"

#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace linkage_lab {

struct WeightTag {};
struct RootTag {};

/// Integer coordinate vector tagged by the basis it is written in.
template <typename Tag>
class CoordVector {
 public:
  CoordVector() = default;
  explicit CoordVector(std::size_t n) : c_(n, 0) {}
  explicit CoordVector(std::vector<Int> c) : c_(std::move(c)) {}
  CoordVector(std::initializer_list<Int> c) : c_(c) {}

  std::size_t size() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }

  CoordVector& operator+=(const CoordVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
  }
  CoordVector& operator-=(const CoordVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
  }
  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator-(CoordVector a) {
    for (auto& x : a.c_) x = checked_sub(0, x);
    return a;
  }
  friend CoordVector operator*(Int k, CoordVector a) {
    for (auto& x : a.c_) x = checked_mul(k, x);
    return a;
  }

  friend bool operator==(const CoordVector&, const CoordVector&) = default;
  friend auto operator<=>(const CoordVector& a, const CoordVector& b) { return a.c_ <=> b.c_; }

 private:
  void check_size(const CoordVector& o) const {
    if (o.c_.size() != c_.size()) throw InvalidInput("coordinate vectors of different rank");
  }
  std::vector<Int> c_;
};

/// Weight in fundamental-weight coordinates: entry i is <lambda, alpha_i^vee>.
using Weight = CoordVector<WeightTag>;
/// Element of the root lattice in simple-root coordinates.
using RootVector = CoordVector<RootTag>;

inline std::string format_coords(const std::vector<Int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

inline std::string to_string(const Weight& w) { return format_coords(w.coords()); }
inline std::string to_string(const RootVector& r) { return "r" + format_coords(r.coords()); }

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const RootVector& r) { return os << to_string(r); }

namespace detail {

[[noreturn]] inline void literal_error(std::string_view text, std::size_t pos, const std::string& what) {
  std::ostringstream msg;
  msg << "malformed literal \"" << text << "\" at position " << pos << ": " << what;
  throw InvalidInput(msg.str());
}

// Grammar: ws '[' ws (int (ws ',' ws int)*)? ws ']' ws, with int = [+-]?[0-9]+.
inline std::vector<Int> parse_bracket_list(std::string_view text, std::size_t pos) {
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') literal_error(text, pos, "expected '['");
  ++pos;
  std::vector<Int> out;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) literal_error(text, pos, "expected integer");
      try {
        out.push_back(std::stoll(std::string(text.substr(start, pos - start))));
      } catch (const std::out_of_range&) {
        literal_error(text, start, "integer out of range");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      literal_error(text, pos, "expected ',' or ']'");
    }
  }
  skip_ws();
  if (pos != text.size()) literal_error(text, pos, "trailing characters");
  if (out.empty()) literal_error(text, pos, "empty coordinate list");
  return out;
}

}  // namespace detail

/// Parses "[a1,...,an]".
inline Weight parse_weight(std::string_view text) { return Weight(detail::parse_bracket_list(text, 0)); }

/// Parses "r[m1,...,mn]".
inline RootVector parse_root(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != 'r') detail::literal_error(text, pos, "expected 'r'");
  return RootVector(detail::parse_bracket_list(text, pos + 1));
}

}  // namespace linkage_lab
