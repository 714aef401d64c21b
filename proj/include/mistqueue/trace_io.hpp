#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "mistqueue/core.hpp"

namespace mistqueue {

// Trace text format v1.
//   #mistqueue-trace v1 W=<int> V=<int> seed=<int>
//   <cycle>\t<n>\t<w1>:<v1>:<K|U>,<w2>:<v2>:<K|U>,...
// One line per non-empty cycle, cycles strictly increasing.

class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void write_trace(const Trace& t, std::ostream& out) {
  out << "#mistqueue-trace v1 W=" << t.meta.W << " V=" << t.meta.V << " seed=" << t.meta.seed
      << "\n";
  for (const ArrivalBatch& b : t.batches) {
    out << b.cycle << '\t' << b.packets.size() << '\t';
    bool first = true;
    for (const Arrival& a : b.packets) {
      if (!first) out << ',';
      out << a.work << ':' << a.profit << ':' << (a.known ? 'K' : 'U');
      first = false;
    }
    out << '\n';
  }
}

namespace detail {

template <typename Int>
Int parse_int(std::string_view text, std::size_t line, const char* what) {
  Int value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw TraceParseError(line, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

inline std::string_view expect_prefix(std::string_view text, std::string_view prefix,
                                      std::size_t line, const char* what) {
  if (text.substr(0, prefix.size()) != prefix) {
    throw TraceParseError(line, std::string("expected ") + what);
  }
  return text.substr(prefix.size());
}

}  // namespace detail

inline Trace read_trace(std::istream& in) {
  Trace t;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw TraceParseError(1, "missing header");
  ++lineno;
  {
    std::string_view rest = line;
    rest = detail::expect_prefix(rest, "#mistqueue-trace v1 W=", lineno, "header '#mistqueue-trace v1 W=...'");
    std::size_t sp = rest.find(' ');
    if (sp == std::string_view::npos) throw TraceParseError(lineno, "truncated header");
    t.meta.W = detail::parse_int<int>(rest.substr(0, sp), lineno, "W");
    rest = detail::expect_prefix(rest.substr(sp + 1), "V=", lineno, "'V=' in header");
    sp = rest.find(' ');
    if (sp == std::string_view::npos) throw TraceParseError(lineno, "truncated header");
    t.meta.V = detail::parse_int<int>(rest.substr(0, sp), lineno, "V");
    rest = detail::expect_prefix(rest.substr(sp + 1), "seed=", lineno, "'seed=' in header");
    t.meta.seed = detail::parse_int<std::uint64_t>(rest, lineno, "seed");
  }
  if (t.meta.W < 2 || t.meta.V < 1) throw TraceParseError(lineno, "header W/V out of range");

  bool have_prev = false;
  std::uint64_t prev_cycle = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string_view rest = line;
    std::size_t tab = rest.find('\t');
    if (tab == std::string_view::npos) throw TraceParseError(lineno, "expected <cycle>\\t<n>\\t...");
    ArrivalBatch batch;
    batch.cycle = detail::parse_int<std::uint64_t>(rest.substr(0, tab), lineno, "cycle");
    if (have_prev && batch.cycle <= prev_cycle) {
      throw TraceParseError(lineno, "cycles must be strictly increasing");
    }
    rest = rest.substr(tab + 1);
    tab = rest.find('\t');
    if (tab == std::string_view::npos) throw TraceParseError(lineno, "expected packet count");
    const auto count = detail::parse_int<std::size_t>(rest.substr(0, tab), lineno, "count");
    if (count == 0) throw TraceParseError(lineno, "empty cycle line");
    rest = rest.substr(tab + 1);

    while (true) {
      std::size_t comma = rest.find(',');
      std::string_view item = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      std::size_t c1 = item.find(':');
      std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos : item.find(':', c1 + 1);
      if (c2 == std::string_view::npos || c2 + 2 != item.size()) {
        throw TraceParseError(lineno, "malformed packet '" + std::string(item) + "'");
      }
      Arrival a;
      a.work = detail::parse_int<int>(item.substr(0, c1), lineno, "work");
      a.profit = detail::parse_int<int>(item.substr(c1 + 1, c2 - c1 - 1), lineno, "profit");
      const char flag = item[c2 + 1];
      if (flag != 'K' && flag != 'U') {
        throw TraceParseError(lineno, "packet flag must be K or U");
      }
      a.known = flag == 'K';
      if (a.work < 1 || a.work > t.meta.W) {
        throw TraceParseError(lineno, "work " + std::to_string(a.work) + " outside [1, " +
                                          std::to_string(t.meta.W) + "]");
      }
      if (a.profit < 1 || a.profit > t.meta.V) {
        throw TraceParseError(lineno, "profit " + std::to_string(a.profit) + " outside [1, " +
                                          std::to_string(t.meta.V) + "]");
      }
      batch.packets.push_back(a);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (batch.packets.size() != count) {
      throw TraceParseError(lineno, "count " + std::to_string(count) + " does not match " +
                                        std::to_string(batch.packets.size()) + " packets");
    }
    prev_cycle = batch.cycle;
    have_prev = true;
    t.batches.push_back(std::move(batch));
  }
  return t;
}

inline std::string trace_to_string(const Trace& t) {
  std::ostringstream out;
  write_trace(t, out);
  return out.str();
}

inline Trace trace_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

}  // namespace mistqueue
