#include "rldual/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace rldual {

namespace {

std::string next_token(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw ParseError("unexpected end of input");
  return tok;
}

void expect(std::istream& in, const std::string& kw) {
  std::string tok = next_token(in);
  if (tok != kw) throw ParseError("expected '" + kw + "', got '" + tok + "'");
}

int next_int(std::istream& in, const std::string& what) {
  std::string tok = next_token(in);
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + what + ": '" + tok + "'");
  }
}

}  // namespace

std::string print_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "algebra " << (a.name.empty() ? std::string("a") : a.name) << "\n";
  os << "mode " << (a.bounded() ? "bounded" : "gmtl") << "\n";
  os << "size " << a.size << "\n";
  os << "leq\n";
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) os << (a.le(x, y) ? '1' : '0');
    os << "\n";
  }
  os << "mul\n";
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      if (y) os << ' ';
      os << a.prod(x, y);
    }
    os << "\n";
  }
  os << "one " << a.one << "\n";
  if (a.bounded()) os << "zero " << *a.zero << "\n";
  os << "end\n";
  return os.str();
}

Algebra parse_algebra(std::istream& in) {
  expect(in, "algebra");
  Algebra a;
  a.name = next_token(in);
  expect(in, "mode");
  std::string mode = next_token(in);
  bool bounded;
  if (mode == "bounded")
    bounded = true;
  else if (mode == "gmtl")
    bounded = false;
  else
    throw ParseError("mode must be 'bounded' or 'gmtl', got '" + mode + "'");
  expect(in, "size");
  int n = next_int(in, "size");
  if (n < 1 || n > kMaxCarrier) throw ParseError("size out of range: " + std::to_string(n));
  a.size = n;

  expect(in, "leq");
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x) {
    std::string row = next_token(in);
    if (static_cast<int>(row.size()) != n) throw ParseError("leq row has wrong width");
    for (Elem y = 0; y < n; ++y) {
      if (row[y] != '0' && row[y] != '1') throw ParseError("leq rows are 0/1 digits");
      a.leq[static_cast<size_t>(x) * n + y] = row[y] == '1' ? 1 : 0;
    }
  }

  expect(in, "mul");
  a.mul.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      int v = next_int(in, "mul entry");
      if (v < 0 || v >= n) throw ParseError("mul entry out of range");
      a.mul[static_cast<size_t>(x) * n + y] = v;
    }
  }

  expect(in, "one");
  a.one = next_int(in, "one");
  if (a.one < 0 || a.one >= n) throw ParseError("one out of range");
  if (bounded) {
    expect(in, "zero");
    int z = next_int(in, "zero");
    if (z < 0 || z >= n) throw ParseError("zero out of range");
    a.zero = z;
  }
  expect(in, "end");
  return a;
}

Algebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_algebra(in);
}

}  // namespace rldual
