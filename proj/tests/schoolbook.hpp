#pragma once

// Decimal-string arithmetic, used as a slow oracle for the GMP-backed types.

#include <algorithm>
#include <string>
#include <vector>

namespace schoolbook {

struct Num {
  bool negative = false;
  std::string digits;  // most significant first, no leading zeros, "0" for zero
};

inline Num parse(const std::string& s) {
  Num n;
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') {
    n.negative = true;
    i = 1;
  }
  n.digits = s.substr(i);
  const auto first = n.digits.find_first_not_of('0');
  n.digits = first == std::string::npos ? "0" : n.digits.substr(first);
  if (n.digits == "0") n.negative = false;
  return n;
}

inline std::string str(const Num& n) { return (n.negative ? "-" : "") + n.digits; }

inline int compare_abs(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

inline std::string add_abs(const std::string& a, const std::string& b) {
  std::string out;
  int carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    int d = carry;
    if (i < a.size()) d += a[a.size() - 1 - i] - '0';
    if (i < b.size()) d += b[b.size() - 1 - i] - '0';
    out.push_back(static_cast<char>('0' + d % 10));
    carry = d / 10;
  }
  std::reverse(out.begin(), out.end());
  return parse(out).digits;
}

// a >= b
inline std::string sub_abs(const std::string& a, const std::string& b) {
  std::string out;
  int borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = (a[a.size() - 1 - i] - '0') - borrow;
    if (i < b.size()) d -= b[b.size() - 1 - i] - '0';
    borrow = d < 0;
    if (d < 0) d += 10;
    out.push_back(static_cast<char>('0' + d));
  }
  std::reverse(out.begin(), out.end());
  return parse(out).digits;
}

inline Num add(const Num& a, const Num& b) {
  if (a.negative == b.negative) return parse((a.negative ? "-" : "") + add_abs(a.digits, b.digits));
  const int c = compare_abs(a.digits, b.digits);
  if (c == 0) return parse("0");
  if (c > 0) return parse((a.negative ? "-" : "") + sub_abs(a.digits, b.digits));
  return parse((b.negative ? "-" : "") + sub_abs(b.digits, a.digits));
}

inline Num negate(Num a) {
  if (a.digits != "0") a.negative = !a.negative;
  return a;
}

inline Num mul(const Num& a, const Num& b) {
  std::vector<int> cells(a.digits.size() + b.digits.size(), 0);
  for (std::size_t i = 0; i < a.digits.size(); ++i) {
    for (std::size_t j = 0; j < b.digits.size(); ++j) {
      cells[i + j + 1] += (a.digits[i] - '0') * (b.digits[j] - '0');
    }
  }
  for (std::size_t k = cells.size() - 1; k > 0; --k) {
    cells[k - 1] += cells[k] / 10;
    cells[k] %= 10;
  }
  std::string out;
  for (int c : cells) out.push_back(static_cast<char>('0' + c));
  Num n = parse(out);
  if (n.digits != "0") n.negative = a.negative != b.negative;
  return n;
}

}  // namespace schoolbook
