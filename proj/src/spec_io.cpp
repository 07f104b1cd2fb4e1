#include "manyval/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <sstream>

namespace manyval {

namespace {

// ---------------------------------------------------------------------------
// .mvl lexer
// ---------------------------------------------------------------------------

enum class Tok { Word, String, Colon, Comma, Dot, LBrace, RBrace, LParen, RParen, Slash, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1, column = 1;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Word: return "a name";
    case Tok::String: return "a quoted string";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Slash: return "'/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(Tok kind) {
    if (current_.kind != kind)
      throw SourceError(current_.line, current_.column,
                        "unexpected " + describe(current_), {tok_name(kind)});
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Word) return "'" + t.text + "'";
    if (t.kind == Tok::String) return "string \"" + t.text + "\"";
    return tok_name(t.kind);
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_ = Token{Tok::End, "", line_, column_};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case ':': current_ = one(Tok::Colon, c); return;
      case ',': current_ = one(Tok::Comma, c); return;
      case '.': current_ = one(Tok::Dot, c); return;
      case '{': current_ = one(Tok::LBrace, c); return;
      case '}': current_ = one(Tok::RBrace, c); return;
      case '(': current_ = one(Tok::LParen, c); return;
      case ')': current_ = one(Tok::RParen, c); return;
      case '/': current_ = one(Tok::Slash, c); return;
      default: break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      current_ = Token{Tok::Arrow, "->", line_, column_};
      consume();
      consume();
      return;
    }
    if (c == '"') {
      consume();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        s += text_[pos_];
        consume();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"')
        throw SourceError(line_, column_, "unterminated string", {"'\"'"});
      consume();
      current_ = Token{Tok::String, std::move(s), current_.line, current_.column};
      return;
    }
    std::string word;
    while (pos_ < text_.size()) {
      char w = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(w))) break;
      if (std::strchr(",.{}():/#\"", w)) break;
      if (w == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      word += w;
      consume();
    }
    if (word.empty())
      throw SourceError(line_, column_, std::string("unexpected character '") + c + "'");
    current_ = Token{Tok::Word, std::move(word), current_.line, current_.column};
  }

  Token one(Tok kind, char c) {
    Token t{kind, std::string(1, c), line_, column_};
    consume();
    return t;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') consume();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        consume();
      } else {
        break;
      }
    }
  }

  void consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
  Token current_;
};

std::size_t pow_checked(std::size_t base, int exp, const Token& at) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::size_t{1} << 24) / base)
      throw SourceError(at.line, at.column, "table too large (more than 2^24 entries)");
    r *= base;
  }
  return r;
}

std::string tuple_text(const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ",";
    s += names[i];
  }
  return s + ")";
}

}  // namespace

Matrix parse_logic(std::string_view text, std::vector<Issue>* warnings) {
  Lexer lex(text);

  bool have_logic = false, have_values = false, have_designated = false;
  std::string name;
  std::vector<std::string> values;
  std::map<std::string, Value> value_index;
  std::vector<std::string> designated;
  std::vector<Operation> ops;

  auto warn = [&](const std::string& message, const std::string& location) {
    if (warnings)
      warnings->push_back(Issue{Issue::Severity::Warning, message, location});
  };

  auto read_value = [&](const char* what) {
    Token t = lex.expect(Tok::Word);
    if (!value_index.count(t.text))
      throw SourceError(t.line, t.column,
                        std::string(what) + " '" + t.text + "' not declared");
    return std::pair<Value, Token>{value_index.at(t.text), t};
  };

  while (lex.peek().kind != Tok::End) {
    Token head = lex.peek();
    if (head.kind != Tok::Word)
      throw SourceError(head.line, head.column, "unexpected " + Lexer::describe(head),
                        {"'logic'", "'values'", "'designated'", "'op'"});
    lex.next();
    if (head.text == "logic") {
      if (have_logic)
        throw SourceError(head.line, head.column, "duplicate logic clause");
      have_logic = true;
      name = lex.expect(Tok::String).text;
      lex.expect(Tok::Dot);
    } else if (head.text == "values") {
      if (have_values)
        throw SourceError(head.line, head.column, "duplicate values clause");
      have_values = true;
      lex.expect(Tok::Colon);
      for (;;) {
        Token v = lex.expect(Tok::Word);
        if (value_index.count(v.text))
          throw SourceError(v.line, v.column, "duplicate value " + v.text);
        value_index[v.text] = static_cast<Value>(values.size());
        values.push_back(v.text);
        if (values.size() > kMaxRepresentable)
          throw SourceError(v.line, v.column,
                            "too many truth values (limit " +
                                std::to_string(kMaxRepresentable) + ")");
        if (lex.peek().kind == Tok::Comma) {
          lex.next();
          continue;
        }
        lex.expect(Tok::Dot);
        break;
      }
    } else if (head.text == "designated") {
      if (have_designated)
        throw SourceError(head.line, head.column, "duplicate designated clause");
      if (!have_values)
        throw SourceError(head.line, head.column,
                          "designated clause before values clause");
      have_designated = true;
      lex.expect(Tok::Colon);
      for (;;) {
        auto [v, t] = read_value("designated value");
        if (std::find(designated.begin(), designated.end(), t.text) != designated.end())
          warn("designated value " + t.text + " listed twice", "designated");
        else
          designated.push_back(t.text);
        if (lex.peek().kind == Tok::Comma) {
          lex.next();
          continue;
        }
        lex.expect(Tok::Dot);
        break;
      }
    } else if (head.text == "op") {
      if (!have_values)
        throw SourceError(head.line, head.column, "op clause before values clause");
      Token op_name = lex.expect(Tok::Word);
      lex.expect(Tok::Slash);
      Token arity_tok = lex.expect(Tok::Word);
      if (arity_tok.text.empty() ||
          !std::all_of(arity_tok.text.begin(), arity_tok.text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw SourceError(arity_tok.line, arity_tok.column,
                          "expected arity (a number), got '" + arity_tok.text + "'");
      int arity = std::stoi(arity_tok.text);
      const std::string loc = "op " + op_name.text + "/" + std::to_string(arity);
      for (const auto& existing : ops) {
        if (existing.name == op_name.text && existing.arity == arity)
          throw SourceError(op_name.line, op_name.column,
                            "duplicate operation " + op_name.text + "/" +
                                std::to_string(arity));
      }
      const std::size_t table_size = pow_checked(values.size(), arity, arity_tok);
      std::vector<Value> table(table_size, kNoValue);
      lex.expect(Tok::LBrace);
      while (lex.peek().kind != Tok::RBrace) {
        std::vector<Value> args;
        std::vector<std::string> arg_names;
        Token entry_at = lex.peek();
        if (lex.peek().kind == Tok::LParen) {
          lex.next();
          if (lex.peek().kind != Tok::RParen) {
            for (;;) {
              auto [v, t] = read_value("value");
              args.push_back(v);
              arg_names.push_back(t.text);
              if (lex.peek().kind == Tok::Comma) {
                lex.next();
                continue;
              }
              break;
            }
          }
          lex.expect(Tok::RParen);
        } else if (arity == 1) {
          auto [v, t] = read_value("value");
          args.push_back(v);
          arg_names.push_back(t.text);
        } else {
          Token t = lex.peek();
          throw SourceError(t.line, t.column, "unexpected " + Lexer::describe(t),
                            {"'('", "'}'"});
        }
        if (static_cast<int>(args.size()) != arity)
          throw SourceError(entry_at.line, entry_at.column,
                            "entry " + tuple_text(arg_names) + " has " +
                                std::to_string(args.size()) + " arguments, operation has arity " +
                                std::to_string(arity));
        lex.expect(Tok::Arrow);
        auto [result, result_tok] = read_value("table output");
        lex.expect(Tok::Dot);
        std::size_t index = 0;
        for (Value a : args) index = index * values.size() + a;
        if (table[index] != kNoValue) {
          if (table[index] == result) {
            warn("duplicate table entry " + tuple_text(arg_names), loc);
          } else {
            throw SourceError(entry_at.line, entry_at.column,
                              "conflicting duplicate table entry " + tuple_text(arg_names) +
                                  ": '" + values[table[index]] + "' vs '" +
                                  values[result] + "'");
          }
        }
        table[index] = result;
      }
      Token rbrace = lex.expect(Tok::RBrace);
      std::vector<std::string> missing;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] != kNoValue) continue;
        std::size_t rest = i;
        std::vector<std::string> tuple(static_cast<std::size_t>(arity));
        for (int a = arity - 1; a >= 0; --a) {
          tuple[static_cast<std::size_t>(a)] = values[rest % values.size()];
          rest /= values.size();
        }
        missing.push_back(tuple_text(tuple));
      }
      if (!missing.empty()) {
        std::string msg = loc + ": " + std::to_string(missing.size()) +
                          " missing entr" + (missing.size() == 1 ? "y" : "ies") + ":";
        for (const auto& t : missing) msg += " " + t;
        throw SourceError(rbrace.line, rbrace.column, msg);
      }
      ops.push_back(Operation{op_name.text, arity, std::move(table)});
    } else {
      throw SourceError(head.line, head.column, "unknown clause '" + head.text + "'",
                        {"'logic'", "'values'", "'designated'", "'op'"});
    }
  }

  Token end = lex.peek();
  if (!have_logic) throw SourceError(end.line, end.column, "missing logic clause");
  if (!have_values) throw SourceError(end.line, end.column, "missing values clause");
  if (!have_designated)
    throw SourceError(end.line, end.column, "missing designated clause");

  Matrix m(name, values, designated, ops);
  ValidationReport report = validate_matrix(m);
  if (!report.ok) {
    for (const auto& issue : report.issues) {
      if (issue.severity == Issue::Severity::Error)
        throw SourceError(end.line, end.column, issue.message);
    }
  }
  return m;
}

std::string serialize_logic(const Matrix& m) {
  std::ostringstream os;
  os << "logic \"" << m.name() << "\".\n";
  os << "values:";
  for (std::size_t i = 0; i < m.size(); ++i)
    os << (i ? ", " : " ") << m.values()[i];
  os << ".\ndesignated:";
  bool first = true;
  for (Value v : m.designated_values()) {
    os << (first ? " " : ", ") << m.value_name(v);
    first = false;
  }
  os << ".\n";
  for (const auto& op : m.ops()) {
    os << "op " << op.name << "/" << op.arity << " {\n";
    const std::size_t n = m.size();
    std::vector<std::size_t> args(static_cast<std::size_t>(op.arity), 0);
    for (std::size_t index = 0; index < op.table.size(); ++index) {
      std::size_t rest = index;
      for (int a = op.arity - 1; a >= 0; --a) {
        args[static_cast<std::size_t>(a)] = rest % n;
        rest /= n;
      }
      os << "  ";
      if (op.arity == 1) {
        os << m.values()[args[0]];
      } else {
        os << "(";
        for (int a = 0; a < op.arity; ++a)
          os << (a ? "," : "") << m.values()[args[static_cast<std::size_t>(a)]];
        os << ")";
      }
      os << " -> " << m.value_name(op.table[index]) << ".\n";
    }
    os << "}\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Formula parser
// ---------------------------------------------------------------------------

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ < text_.size())
      throw SourceError(1, static_cast<int>(pos_) + 1,
                        std::string("unexpected character '") + text_[pos_] + "'",
                        {"end of formula"});
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|') {
      ++pos_;
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek() == '&') {
      ++pos_;
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      if (peek() != ')')
        throw SourceError(1, static_cast<int>(pos_) + 1, "unbalanced parenthesis",
                          {"')'"});
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size()) {
        char w = text_[pos_];
        if (!std::isalnum(static_cast<unsigned char>(w)) && w != '_') break;
        name += w;
        ++pos_;
      }
      return Formula::atom(std::move(name));
    }
    if (c == '\0')
      throw SourceError(1, static_cast<int>(pos_) + 1, "unexpected end of formula",
                        {"an atom", "'~'", "'('"});
    throw SourceError(1, static_cast<int>(pos_) + 1,
                      std::string("unexpected character '") + c + "'",
                      {"an atom", "'~'", "'('"});
  }

  // Returns the next significant character without consuming it, '\0' at end.
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ---------------------------------------------------------------------------
// LaTeX tables
// ---------------------------------------------------------------------------

namespace {

const char* kPalette[9] = {"red",  "orange", "green", "violet", "gray",
                           "blue", "teal",   "brown", "magenta"};

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '$': case '#': out += '\\'; out += c; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_latex_tables(const Matrix& m, const Partition* classes) {
  std::vector<int> block;
  if (classes) {
    if (classes->matrix_name != m.name())
      throw Error("foreign partition: belongs to matrix '" + classes->matrix_name +
                  "', not '" + m.name() + "'");
    Partition checked = Partition::of_blocks(m, classes->blocks);
    block = checked.block_of(m.size());
  }

  auto cell = [&](Value v) {
    std::string s = latex_escape(m.value_name(v));
    if (classes)
      s = "\\textcolor{" + std::string(kPalette[block[v] % 9]) + "}{" + s + "}";
    if (m.is_designated(v)) s = "\\textbf{" + s + "}";
    return s;
  };

  std::ostringstream os;
  os << "% truth tables for matrix \"" << m.name() << "\"\n"
     << "% requires \\usepackage{xcolor}\n";
  const std::size_t n = m.size();
  for (const auto& op : m.ops()) {
    os << "% op " << op.name << "/" << op.arity << "\n";
    if (op.arity == 1) {
      os << "\\begin{tabular}{c|c}\n"
         << "$\\mathrm{" << latex_escape(op.name) << "}$ & \\\\\n\\hline\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << cell(static_cast<Value>(i)) << " & " << cell(op.table[i]) << " \\\\\n";
      }
      os << "\\end{tabular}\n\n";
    } else if (op.arity == 2) {
      os << "\\begin{tabular}{c|" << std::string(n, 'c') << "}\n"
         << "$\\mathrm{" << latex_escape(op.name) << "}$";
      for (std::size_t j = 0; j < n; ++j) os << " & " << cell(static_cast<Value>(j));
      os << " \\\\\n\\hline\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << cell(static_cast<Value>(i));
        for (std::size_t j = 0; j < n; ++j) os << " & " << cell(op.table[i * n + j]);
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n\n";
    } else {
      // No square layout for other arities; emit an argument/result listing.
      os << "\\begin{tabular}{c|c}\n"
         << "$\\mathrm{" << latex_escape(op.name) << "}$ & \\\\\n\\hline\n";
      std::vector<std::size_t> args(static_cast<std::size_t>(op.arity), 0);
      for (std::size_t index = 0; index < op.table.size(); ++index) {
        std::size_t rest = index;
        for (int a = op.arity - 1; a >= 0; --a) {
          args[static_cast<std::size_t>(a)] = rest % n;
          rest /= n;
        }
        os << "(";
        for (int a = 0; a < op.arity; ++a)
          os << (a ? "," : "") << cell(static_cast<Value>(args[static_cast<std::size_t>(a)]));
        os << ") & " << cell(op.table[index]) << " \\\\\n";
      }
      os << "\\end{tabular}\n\n";
    }
  }
  return os.str();
}

}  // namespace manyval
