#include "onethree/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "onethree/random.hpp"

namespace onethree {

namespace {

void validate_clause(const Clause& c, int n, int p) {
  for (const Literal& lit : c.lits) {
    if (lit.var < 1 || lit.var > n) {
      throw std::invalid_argument("clause " + std::to_string(p + 1) + ": variable " +
                                  std::to_string(lit.var) + " outside 1.." + std::to_string(n));
    }
  }
  const auto& l = c.lits;
  if (l[0].var == l[1].var || l[0].var == l[2].var || l[1].var == l[2].var) {
    throw std::invalid_argument("clause " + std::to_string(p + 1) + ": duplicate variable in clause");
  }
}

}  // namespace

Instance::Instance(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw std::invalid_argument("negative variable count");
  for (int p = 0; p < num_clauses(); ++p) {
    validate_clause(clauses_[p], num_vars_, p);
    for (const Literal& lit : clauses_[p].lits) {
      if (lit.negated) positive_only_ = false;
    }
  }
}

int Instance::occurring_vars() const {
  std::vector<bool> seen(num_vars_ + 1, false);
  int count = 0;
  for (const Clause& c : clauses_) {
    for (const Literal& lit : c.lits) {
      if (!seen[lit.var]) {
        seen[lit.var] = true;
        ++count;
      }
    }
  }
  return count;
}

Instance generate_random(int n, int m, std::uint64_t seed, bool positive_only) {
  if (n < 3) throw std::invalid_argument("generate_random: n must be at least 3");
  if (m < 1) throw std::invalid_argument("generate_random: m must be at least 1");
  CounterRng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (int p = 0; p < m; ++p) {
    int v[3];
    do {
      for (int& x : v) x = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n))) + 1;
    } while (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]);
    Clause c;
    for (int i = 0; i < 3; ++i) {
      const bool neg = positive_only ? false : (rng.next() >> 63) != 0;
      c.lits[i] = Literal{v[i], neg};
    }
    clauses.push_back(c);
  }
  return Instance(n, std::move(clauses));
}

bool is_satisfying(const Instance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.num_vars()) {
    throw std::invalid_argument("is_satisfying: assignment length does not match variable count");
  }
  for (const Clause& c : inst.clauses()) {
    int trues = 0;
    for (const Literal& lit : c.lits) trues += literal_value(lit, a) ? 1 : 0;
    if (trues != 1) return false;
  }
  return true;
}

std::set<Assignment> brute_force_solutions(const Instance& inst) {
  const int n = inst.num_vars();
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_solutions: n=" + std::to_string(n) +
                                " exceeds the enumeration budget of " +
                                std::to_string(kBruteForceLimit));
  }
  std::set<Assignment> out;
  Assignment a(n, 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (int i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
    if (is_satisfying(inst, a)) out.insert(a);
  }
  return out;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  int n = -1;
  int m = -1;
  std::vector<Clause> clauses;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto toks = split_tokens(line);
    if (toks.empty() || toks[0].text[0] == 'c') continue;

    if (toks[0].text == "p") {
      if (n >= 0) throw ParseError(line_no, toks[0].column, "duplicate header");
      if (toks.size() != 4 || toks[1].text != "onethree") {
        throw ParseError(line_no, toks[0].column, "bad header, expected 'p onethree <n> <m>'");
      }
      n = parse_int(toks[2], line_no);
      m = parse_int(toks[3], line_no);
      if (n < 0) throw ParseError(line_no, toks[2].column, "bad header, negative variable count");
      if (m < 0) throw ParseError(line_no, toks[3].column, "bad header, negative clause count");
      continue;
    }
    if (n < 0) throw ParseError(line_no, toks[0].column, "clause before header");
    if (static_cast<int>(clauses.size()) == m) {
      throw ParseError(line_no, toks[0].column, "more clauses than declared in header");
    }

    std::vector<Literal> lits;
    bool terminated = false;
    for (const Token& tok : toks) {
      if (terminated) throw ParseError(line_no, tok.column, "content after clause terminator 0");
      const int v = parse_int(tok, line_no);
      if (v == 0) {
        terminated = true;
        continue;
      }
      const Literal lit = Literal::from_signed(v);
      if (lit.var > n) {
        throw ParseError(line_no, tok.column,
                         "literal out of range: " + std::to_string(v) + " with n=" + std::to_string(n));
      }
      for (const Literal& prev : lits) {
        if (prev.var == lit.var) {
          throw ParseError(line_no, tok.column, "duplicate variable in clause: " + std::to_string(lit.var));
        }
      }
      lits.push_back(lit);
    }
    if (!terminated) throw ParseError(line_no, toks.back().column, "clause not terminated by 0");
    if (lits.size() != 3) {
      throw ParseError(line_no, toks[0].column,
                       "wrong literal count per clause: expected 3, got " + std::to_string(lits.size()));
    }
    clauses.push_back(Clause{{lits[0], lits[1], lits[2]}});
  }
  if (n < 0) throw ParseError(line_no, 1, "missing header 'p onethree <n> <m>'");
  if (static_cast<int>(clauses.size()) != m) {
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(m) + " clauses, found " + std::to_string(clauses.size()));
  }
  return Instance(n, std::move(clauses));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "p onethree " << inst.num_vars() << ' ' << inst.num_clauses() << '\n';
  for (const Clause& c : inst.clauses()) {
    os << c.lits[0].signed_value() << ' ' << c.lits[1].signed_value() << ' '
       << c.lits[2].signed_value() << " 0\n";
  }
  return os.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace onethree
