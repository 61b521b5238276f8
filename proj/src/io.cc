#include "bent/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bent/errors.h"

namespace bent {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

std::string hex_value(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-empty line with surrounding whitespace stripped.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(is_, raw)) {
      ++line_;
      const auto b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = raw.find_last_not_of(" \t\r");
      out = raw.substr(b, e - b + 1);
      return true;
    }
    return false;
  }

  std::string require(const char* what) {
    std::string s;
    if (!next(s)) throw ParseError(std::string("unexpected end of input, expected ") + what, line_ + 1);
    return s;
  }

  int line() const { return line_; }

 private:
  std::istream& is_;
  int line_ = 0;
};

// Parses "k1=<v1> k2=<v2> ..." in the given key order.
std::vector<long long> parse_header(const std::string& s, std::initializer_list<const char*> keys,
                                    int line) {
  std::istringstream is(s);
  std::vector<long long> out;
  for (const char* key : keys) {
    std::string tok;
    if (!(is >> tok)) throw ParseError(std::string("missing header field '") + key + "='", line);
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0) {
      throw ParseError("expected '" + prefix + "', found '" + tok + "'", line);
    }
    long long v = 0;
    const char* first = tok.data() + prefix.size();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("bad integer in '" + tok + "'", line);
    }
    out.push_back(v);
  }
  std::string extra;
  if (is >> extra) throw ParseError("unexpected token '" + extra + "' in header", line);
  return out;
}

std::uint64_t parse_hex_value(const std::string& s, int line) {
  std::string t = s;
  if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v, 16);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("bad hex value '" + s + "'", line);
  }
  return v;
}

void expect_end(LineReader& r) {
  std::string s;
  if (r.next(s)) throw ParseError("trailing content '" + s + "'", r.line());
}

}  // namespace

std::string to_hex(const BoolFn& f) {
  const std::uint64_t digits = std::max<std::uint64_t>(1, f.size() / 4);
  std::string out(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t i = 4 * d + b;
      if (i < f.size() && f(i)) v |= 1u << b;
    }
    out[d] = kHexDigits[v];
  }
  return out;
}

BoolFn from_hex(int n, const std::string& hex, int line) {
  if (n < 1 || n > kMaxVars) throw ParseError("n=" + std::to_string(n) + " out of range", line);
  BoolFn f(n);
  const std::uint64_t digits = std::max<std::uint64_t>(1, f.size() / 4);
  if (hex.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits, found " +
                         std::to_string(hex.size()),
                     line);
  }
  for (std::uint64_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParseError(std::string("invalid hex digit '") + c + "'", line);
    }
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t i = 4 * d + b;
      if ((v >> b) & 1) {
        if (i >= f.size()) throw ParseError("bits set beyond the 2^n table", line);
        f.set(i, true);
      }
    }
  }
  return f;
}

void write_truth_table(std::ostream& os, const BoolFn& f) {
  os << "n=" << f.n() << "\n" << to_hex(f) << "\n";
}

BoolFn read_truth_table(std::istream& is) {
  LineReader r(is);
  const std::string header = r.require("header 'n=<n>'");
  const auto h = parse_header(header, {"n"}, r.line());
  const std::string body = r.require("hex truth table");
  BoolFn f = from_hex(static_cast<int>(h[0]), body, r.line());
  expect_end(r);
  return f;
}

void write_spectrum_csv(std::ostream& os, std::span<const std::int64_t> w) {
  os << "b,W\n";
  for (std::size_t b = 0; b < w.size(); ++b) os << b << "," << w[b] << "\n";
}

void write_vecfn(std::ostream& os, const VecFn& f) {
  os << "n=" << f.n << " k=" << f.k << "\n";
  for (std::uint32_t v : f.table) os << hex_value(v) << "\n";
}

VecFn read_vecfn(std::istream& is) {
  LineReader r(is);
  const std::string header = r.require("header 'n=<n> k=<k>'");
  const auto h = parse_header(header, {"n", "k"}, r.line());
  if (h[0] < 1 || h[0] > kMaxVars || h[1] < 1 || h[1] > 32) {
    throw ParseError("dimensions out of range", r.line());
  }
  VecFn f{static_cast<int>(h[0]), static_cast<int>(h[1]), {}};
  const std::size_t count = std::size_t{1} << f.n;
  f.table.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string s = r.require("vectorial table entry");
    const std::uint64_t v = parse_hex_value(s, r.line());
    if (f.k < 32 && (v >> f.k) != 0) throw ParseError("value exceeds k bits", r.line());
    f.table.push_back(static_cast<std::uint32_t>(v));
  }
  expect_end(r);
  return f;
}

void write_subspace(std::ostream& os, const Subspace& s) {
  os << "n=" << s.n() << " dim=" << s.dim() << "\n";
  for (std::uint64_t b : s.basis()) os << hex_value(b) << "\n";
}

Subspace read_subspace(std::istream& is) {
  LineReader r(is);
  const std::string header = r.require("header 'n=<n> dim=<d>'");
  const int hl = r.line();
  const auto h = parse_header(header, {"n", "dim"}, hl);
  if (h[0] < 1 || h[0] > 63 || h[1] < 0 || h[1] > h[0]) throw ParseError("dimensions out of range", hl);
  std::vector<std::uint64_t> basis;
  for (long long i = 0; i < h[1]; ++i) basis.push_back(parse_hex_value(r.require("basis vector"), r.line()));
  expect_end(r);
  try {
    return Subspace(static_cast<int>(h[0]), std::move(basis));
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), hl);
  }
}

void write_perm(std::ostream& os, const PermTable& p) {
  os << "m=" << p.m << "\n";
  for (Elem v : p.table) os << hex_value(v) << "\n";
}

PermTable read_perm(std::istream& is) {
  LineReader r(is);
  const std::string header = r.require("header 'm=<m>'");
  const int hl = r.line();
  const auto h = parse_header(header, {"m"}, hl);
  if (h[0] < 1 || h[0] > kMaxFieldDegree) throw ParseError("m out of range", hl);
  std::vector<Elem> t;
  for (std::size_t i = 0; i < (std::size_t{1} << h[0]); ++i) {
    t.push_back(static_cast<Elem>(parse_hex_value(r.require("table entry"), r.line())));
  }
  expect_end(r);
  try {
    return make_perm(Field::make(static_cast<int>(h[0])), std::move(t));
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), hl);
  }
}

void write_subfield_fn(std::ostream& os, const SubfieldFn& p) {
  os << "m=" << p.m << " k=" << p.k << "\n";
  for (Elem v : p.table) os << hex_value(v) << "\n";
}

SubfieldFn read_subfield_fn(std::istream& is) {
  LineReader r(is);
  const std::string header = r.require("header 'm=<m> k=<k>'");
  const int hl = r.line();
  const auto h = parse_header(header, {"m", "k"}, hl);
  if (h[0] < 1 || h[0] > kMaxFieldDegree || h[1] < 1 || h[0] % h[1] != 0) {
    throw ParseError("need 1 <= m <= 16 and k | m", hl);
  }
  SubfieldFn p{static_cast<int>(h[0]), static_cast<int>(h[1]), {}};
  for (std::size_t i = 0; i < (std::size_t{1} << p.k); ++i) {
    p.table.push_back(static_cast<Elem>(parse_hex_value(r.require("table entry"), r.line())));
  }
  expect_end(r);
  return p;
}

void write_report(std::ostream& os, const DecompositionReport& r) {
  os << "u: " << hex_value(r.u) << "\n";
  os << "v: " << hex_value(r.v) << "\n";
  os << "classification: " << to_string(r.classification) << "\n";
  for (std::size_t i = 0; i < 4; ++i) {
    os << "f" << i + 1 << ".rep: " << hex_value(r.restrictions.reps[i]) << "\n";
    os << "f" << i + 1 << ".table: " << to_hex(r.restrictions.parts[i]) << "\n";
    os << "f" << i + 1 << ".status: "
       << (r.bent[i] ? "bent" : r.semibent[i] ? "semibent" : "neither") << "\n";
    os << "f" << i + 1 << ".spectrum:";
    for (const auto& [amp, cnt] : r.spectra[i]) os << " " << amp << "x" << cnt;
    os << "\n";
  }
  if (r.dual_second_derivative) {
    os << "dual_second_derivative: " << to_string(*r.dual_second_derivative) << "\n";
    os << "criterion_agrees: " << (*r.criterion_agrees ? "yes" : "no") << "\n";
  }
}

std::string report_json(const DecompositionReport& r) {
  nlohmann::json j;
  j["u"] = hex_value(r.u);
  j["v"] = hex_value(r.v);
  j["classification"] = to_string(r.classification);
  for (std::size_t i = 0; i < 4; ++i) {
    nlohmann::json part;
    part["rep"] = hex_value(r.restrictions.reps[i]);
    part["table"] = to_hex(r.restrictions.parts[i]);
    part["bent"] = r.bent[i];
    part["semibent"] = r.semibent[i];
    nlohmann::json spec = nlohmann::json::object();
    for (const auto& [amp, cnt] : r.spectra[i]) spec[std::to_string(amp)] = cnt;
    part["spectrum"] = spec;
    j["restrictions"].push_back(part);
  }
  if (r.dual_second_derivative) {
    j["dual_second_derivative"] = to_string(*r.dual_second_derivative);
    j["criterion_agrees"] = *r.criterion_agrees;
  }
  return j.dump(2);
}

void write_scan_csv(std::ostream& os, const ScanSummary& s) {
  os << "span_basis1,span_basis2,class\n";
  for (const ScanEntry& e : s.entries) {
    os << hex_value(e.u) << "," << hex_value(e.v) << "," << to_string(e.classification) << "\n";
  }
}

BoolFn load_truth_table(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return read_truth_table(in);
}

void save_truth_table(const std::filesystem::path& p, const BoolFn& f) {
  std::ofstream out(p);
  if (!out) throw ParameterError("cannot write " + p.string());
  write_truth_table(out, f);
}

}  // namespace bent
