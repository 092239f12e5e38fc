#include "nrt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nrt/errors.hpp"

namespace nrt {

Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Perm& p) {
  const int d = static_cast<int>(p.size());
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = p[static_cast<std::size_t>(q[i])];
  }
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  }
  return r;
}

int perm_order(const Perm& p) {
  int ord = 1;
  for (int len : perm_cycle_type(p)) {
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool perm_is_even(const Perm& p) {
  int transpositions = 0;
  for (const auto& cyc : perm_cycles(p)) {
    transpositions += static_cast<int>(cyc.size()) - 1;
  }
  return transpositions % 2 == 0;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      continue;
    }
    std::vector<int> cyc;
    int x = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
      x = p[static_cast<std::size_t>(x)];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<int> perm_cycle_type(const Perm& p) {
  std::vector<int> type;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    int len = 0;
    int x = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
      x = p[static_cast<std::size_t>(x)];
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::string format_cycles(const Perm& p) {
  const auto cycles = perm_cycles(p);
  if (cycles.empty()) {
    return "()";
  }
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) {
        out << ' ';
      }
      out << cyc[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

Perm parse_cycles(const std::string& text, int degree) {
  if (degree < 0) {
    throw Error(ErrorKind::ParseError, "negative degree");
  }
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorKind::ParseError,
                  "expected '(' at position " + std::to_string(i) + " in \"" + text + "\"");
    }
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == start) {
        throw Error(ErrorKind::ParseError,
                    "expected a point at position " + std::to_string(i) + " in \"" + text + "\"");
      }
      int point = std::stoi(text.substr(start, i - start));
      if (point < 1 || point > degree) {
        throw Error(ErrorKind::ParseError, "point " + std::to_string(point) +
                                               " out of range 1.." + std::to_string(degree));
      }
      cyc.push_back(point - 1);
      skip_ws();
    }
    if (i == text.size()) {
      throw Error(ErrorKind::ParseError, "unterminated cycle in \"" + text + "\"");
    }
    ++i;  // ')'
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::NotAPermutation, "repeated point within a cycle in \"" + text + "\"");
    }
    if (cyc.size() >= 2) {
      cycles.push_back(std::move(cyc));
    }
    skip_ws();
  }
  // Rightmost cycle acts first: folding left to right keeps each new cycle
  // on the inside of the composite.
  Perm p = perm_identity(degree);
  for (const auto& cyc : cycles) {
    Perm c = perm_identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      c[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    }
    p = perm_compose(p, c);
  }
  return p;
}

std::vector<Perm> parse_cycles_list(const std::string& text, int degree) {
  std::vector<Perm> result;
  std::string current;
  const auto flush = [&] {
    if (current.find_first_not_of(" \t\n\r") != std::string::npos) {
      result.push_back(parse_cycles(current, degree));
    }
    current.clear();
  };
  for (char ch : text) {
    if (ch == ';' || ch == ',') {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return result;
}

std::vector<Perm> all_permutations(int degree) {
  std::vector<Perm> perms;
  Perm p = perm_identity(degree);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace nrt
