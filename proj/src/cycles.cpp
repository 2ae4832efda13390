#include "fixity/cycles.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace fixity {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, 0, i);
  }
};

std::uint64_t read_point(Cursor& c) {
  c.skip_ws();
  if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    c.fail("expected a point");
  std::uint64_t v = 0;
  while (c.i < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    v = v * 10 + std::uint64_t(c.s[c.i] - '0');
    if (v > 1'000'000'000) c.fail("point out of range");
    ++c.i;
  }
  return v;
}

}  // namespace

Perm parse_cycles(const std::string& text, std::size_t degree) {
  if (degree == 0) throw InputError("degree must be at least 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point(0));
  std::vector<bool> used(degree, false);

  Cursor c{text};
  bool any_cycle = false;
  while (!c.done()) {
    if (c.peek() != '(') c.fail("expected '('");
    ++c.i;
    any_cycle = true;
    std::vector<Point> cyc;
    while (true) {
      if (c.peek() == ')') {
        ++c.i;
        break;
      }
      if (!cyc.empty()) {
        if (c.peek() == ',') ++c.i;
        // otherwise whitespace already separates the points
      }
      if (c.peek() == ')') c.fail("trailing separator in cycle");
      std::uint64_t v = read_point(c);
      if (v < 1) c.fail("points are 1-based");
      if (v > degree)
        c.fail("point " + std::to_string(v) + " exceeds degree " +
               std::to_string(degree));
      Point p = Point(v - 1);
      if (used[p]) c.fail("repeated point " + std::to_string(v));
      used[p] = true;
      cyc.push_back(p);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_cycle && !text.empty())
    (void)0;  // pure whitespace input means identity, same as "()"
  return Perm(std::move(img));
}

std::string print_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (done[x] || p[x] == x) continue;
    out += '(';
    Point y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(y + 1);
      done[y] = true;
      y = p[y];
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace fixity
