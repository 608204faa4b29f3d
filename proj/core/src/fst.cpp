#include "fsdim/fst.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "fsdim/error.hpp"

namespace fsdim {

Fst::Fst(unsigned base, std::size_t state_count, StateId start, std::vector<Edge> edges)
    : base_(base), state_count_(state_count), start_(start), edges_(std::move(edges)) {
  check_base(base_);
  if (state_count_ == 0) {
    throw Error(ErrorCode::StateOutOfRange, "transducer needs at least one state");
  }
  if (start_ >= state_count_) {
    throw Error(ErrorCode::StateOutOfRange, "start state " + std::to_string(start_) +
                                                " >= " + std::to_string(state_count_));
  }
  if (edges_.size() != state_count_ * base_) {
    throw Error(ErrorCode::MissingTransition,
                "expected " + std::to_string(state_count_ * base_) + " transitions, got " +
                    std::to_string(edges_.size()));
  }
  for (const Edge& e : edges_) {
    if (e.next >= state_count_) {
      throw Error(ErrorCode::StateOutOfRange, "transition target " + std::to_string(e.next) +
                                                  " >= " + std::to_string(state_count_));
    }
    check_digits(e.output, base_);
    max_burst_ = std::max(max_burst_, e.output.size());
  }
}

RunResult run_from(const Fst& t, StateId q, DigitView pi) {
  check_digits(pi, t.base());
  RunResult r{{}, q};
  for (Digit a : pi) {
    const Edge& e = t.edge(r.state, a);
    r.output.insert(r.output.end(), e.output.begin(), e.output.end());
    r.state = e.next;
  }
  return r;
}

Digits run(const Fst& t, DigitView pi) { return run_from(t, t.start(), pi).output; }

Fst complement_lift(const Fst& t) {
  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) e.output = comp(e.output, t.base());
  return Fst(t.base(), t.state_count(), t.start(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  if (tok.text.empty() || tok.text.size() > 9) {
    fail(ErrorCode::SyntaxError, line, tok.col, "expected a number, got '" + tok.text + "'");
  }
  std::size_t v = 0;
  for (char c : tok.text) {
    if (c < '0' || c > '9') {
      fail(ErrorCode::SyntaxError, line, tok.col, "expected a number, got '" + tok.text + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

Fst parse_fst(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  int header = 0;  // number of header directives consumed
  unsigned base = 0;
  std::size_t states = 0;
  std::size_t start = 0;
  std::vector<std::optional<Edge>> table;
  const char* expected[] = {"fst", "base", "states", "start"};

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (header < 4) {
      if (toks[0].text != expected[header]) {
        fail(ErrorCode::SyntaxError, lineno, toks[0].col,
             std::string("expected '") + expected[header] + "', got '" + toks[0].text + "'");
      }
      if (toks.size() != 2) {
        std::size_t col = toks.size() < 2 ? raw.size() + 1 : toks[2].col;
        fail(ErrorCode::SyntaxError, lineno, col,
             std::string("'") + expected[header] + "' takes exactly one argument");
      }
      std::size_t v = parse_count(toks[1], lineno);
      switch (header) {
        case 0:
          if (v != 1) fail(ErrorCode::SyntaxError, lineno, toks[1].col, "unsupported version");
          break;
        case 1:
          if (v < kMinBase || v > kMaxBase) {
            fail(ErrorCode::InvalidBase, lineno, toks[1].col,
                 "base " + toks[1].text + " outside [2,10]");
          }
          base = static_cast<unsigned>(v);
          break;
        case 2:
          if (v == 0) fail(ErrorCode::StateOutOfRange, lineno, toks[1].col, "need >= 1 state");
          states = v;
          table.assign(states * base, std::nullopt);
          break;
        case 3:
          if (v >= states) {
            fail(ErrorCode::StateOutOfRange, lineno, toks[1].col,
                 "start state " + toks[1].text + " out of range");
          }
          start = v;
          break;
      }
      ++header;
      continue;
    }
    if (toks[0].text != "t") {
      fail(ErrorCode::SyntaxError, lineno, toks[0].col,
           "expected transition 't', got '" + toks[0].text + "'");
    }
    if (toks.size() != 5) {
      std::size_t col = toks.size() < 5 ? raw.size() + 1 : toks[5].col;
      fail(ErrorCode::SyntaxError, lineno, col, "transition needs: t <q> <a> <q'> <out>");
    }
    std::size_t q = parse_count(toks[1], lineno);
    std::size_t a = parse_count(toks[2], lineno);
    std::size_t next = parse_count(toks[3], lineno);
    if (q >= states) fail(ErrorCode::StateOutOfRange, lineno, toks[1].col, "state out of range");
    if (a >= base) fail(ErrorCode::InvalidDigit, lineno, toks[2].col, "symbol not in alphabet");
    if (next >= states) {
      fail(ErrorCode::StateOutOfRange, lineno, toks[3].col, "target state out of range");
    }
    Digits out;
    if (toks[4].text != "-") {
      for (std::size_t k = 0; k < toks[4].text.size(); ++k) {
        char c = toks[4].text[k];
        if (c < '0' || c > '9') {
          fail(ErrorCode::SyntaxError, lineno, toks[4].col + k, "output must be digits or '-'");
        }
        if (static_cast<unsigned>(c - '0') >= base) {
          fail(ErrorCode::InvalidDigit, lineno, toks[4].col + k, "output digit not in alphabet");
        }
        out.push_back(static_cast<Digit>(c - '0'));
      }
    }
    auto& slot = table[q * base + a];
    if (slot) {
      fail(ErrorCode::DuplicateTransition, lineno, toks[0].col,
           "duplicate transition (" + std::to_string(q) + "," + std::to_string(a) + ")");
    }
    slot = Edge{static_cast<StateId>(next), std::move(out)};
  }

  if (header < 4) {
    fail(ErrorCode::SyntaxError, lineno + 1, 1,
         std::string("missing '") + expected[header] + "' directive");
  }
  std::vector<Edge> edges;
  edges.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      throw Error(ErrorCode::MissingTransition,
                  "missing transition (" + std::to_string(i / base) + "," +
                      std::to_string(i % base) + ")");
    }
    edges.push_back(std::move(*table[i]));
  }
  return Fst(base, states, static_cast<StateId>(start), std::move(edges));
}

std::string format_fst(const Fst& t) {
  std::string out = "fst 1\nbase " + std::to_string(t.base()) + "\nstates " +
                    std::to_string(t.state_count()) + "\nstart " + std::to_string(t.start()) +
                    "\n";
  for (std::size_t q = 0; q < t.state_count(); ++q) {
    for (unsigned a = 0; a < t.base(); ++a) {
      const Edge& e = t.edge(static_cast<StateId>(q), static_cast<Digit>(a));
      out += "t " + std::to_string(q) + " " + std::to_string(a) + " " + std::to_string(e.next) +
             " " + (e.output.empty() ? std::string("-") : to_string(e.output)) + "\n";
    }
  }
  return out;
}

Fst load_fst(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open transducer file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fst(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ":" + e.what());
  }
}

void save_fst(const Fst& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write transducer file '" + path + "'");
  out << format_fst(t);
}

}  // namespace fsdim
