#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "relmatch/nfa.hpp"

namespace relmatch {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw NfaFormatError(line, std::string("expected ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

State parse_state(std::string_view field, std::size_t line, std::uint64_t n) {
  const std::uint64_t q = parse_number(field, line, "state");
  if (q < 1 || q > n) throw NfaFormatError(line, "state " + std::string(field) + " out of range 1.." + std::to_string(n));
  return static_cast<State>(q - 1);
}

}  // namespace

void write_nfa(std::ostream& out, const Nfa& a) {
  out << "nfa " << a.state_count() << ' ' << a.sigma() << ' ' << a.initial() + 1 << ' '
      << a.accepting() + 1 << '\n';
  for (const Transition& t : a.transitions()) {
    out << t.source + 1 << ' ';
    if (t.is_epsilon()) {
      out << 'e';
    } else {
      out << t.label;
    }
    out << ' ' << t.target + 1 << '\n';
  }
}

std::string to_text(const Nfa& a) {
  std::ostringstream out;
  write_nfa(out, a);
  return out.str();
}

Nfa read_nfa(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, sigma = 0;
  State q0 = 0, qf = 0;
  std::vector<Transition> transitions;

  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 5 || fields[0] != "nfa") {
        throw NfaFormatError(line_no, "expected header 'nfa <n> <sigma> <q0> <qf>'");
      }
      n = parse_number(fields[1], line_no, "state count");
      sigma = parse_number(fields[2], line_no, "alphabet size");
      if (n == 0 || n > std::numeric_limits<State>::max() - 1) {
        throw NfaFormatError(line_no, "state count out of range");
      }
      if (sigma > std::numeric_limits<Symbol>::max() - 1) {
        throw NfaFormatError(line_no, "alphabet size out of range");
      }
      q0 = parse_state(fields[3], line_no, n);
      qf = parse_state(fields[4], line_no, n);
      have_header = true;
      continue;
    }
    if (fields.size() != 3) throw NfaFormatError(line_no, "expected '<src> <label> <dst>'");
    Transition t;
    t.source = parse_state(fields[0], line_no, n);
    if (fields[1] == "e") {
      t.label = kEpsilon;
    } else {
      const std::uint64_t label = parse_number(fields[1], line_no, "label");
      if (label < 1 || label > sigma) {
        throw NfaFormatError(line_no, "label " + std::string(fields[1]) + " out of range 1.." + std::to_string(sigma));
      }
      t.label = static_cast<Symbol>(label);
    }
    t.target = parse_state(fields[2], line_no, n);
    transitions.push_back(t);
  }
  if (!have_header) throw NfaFormatError(line_no, "missing 'nfa' header");
  return Nfa(static_cast<std::size_t>(n), static_cast<Symbol>(sigma), q0, qf, std::move(transitions));
}

Nfa parse_nfa_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_nfa(in);
}

}  // namespace relmatch
