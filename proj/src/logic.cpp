#include "belief/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace belt {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rat(const Rat& r) {
  std::hash<std::string> h;
  return h(rat_to_fraction_string(r));
}

}  // namespace

ThresholdSet ThresholdSet::explicit_set(std::vector<Rat> vals) {
  if (vals.empty())
    throw Error(ErrKind::Schema, "explicit threshold set must be nonempty");
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (const Rat& v : vals)
    if (v < 0 || v > 1)
      throw Error(ErrKind::ThresholdOutOfRange, rat_to_string(v));
  ThresholdSet t;
  t.dense = false;
  t.values = std::move(vals);
  return t;
}

ThresholdSet ThresholdSet::parse(std::string_view text) {
  if (text == "dense") return dense_rationals();
  std::vector<Rat> vals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    vals.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return explicit_set(std::move(vals));
}

bool ThresholdSet::contains(const Rat& theta) const {
  if (dense) return theta >= 0 && theta <= 1;
  return std::binary_search(values.begin(), values.end(), theta);
}

bool ThresholdSet::missing_one() const { return !dense && !contains(Rat(1)); }

std::string ThresholdSet::to_string() const {
  if (dense) return "dense";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(values[i]);
  }
  return out;
}

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Atom;
  n->atom = std::move(name);
  n->hash = mix(1, std::hash<std::string>{}(n->atom));
  return Formula(std::move(n));
}

Formula Formula::lnot(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Not;
  n->depth = f.modal_depth();
  n->size = f.size() + 1;
  n->hash = mix(2, f.hash());
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::land(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::And;
  n->depth = std::max(a.modal_depth(), b.modal_depth());
  n->size = a.size() + b.size() + 1;
  n->hash = mix(mix(3, a.hash()), b.hash());
  n->lhs = std::move(a.node_);
  n->rhs = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::lor(Formula a, Formula b) {
  return lnot(land(lnot(std::move(a)), lnot(std::move(b))));
}

Formula Formula::implies(Formula a, Formula b) {
  return lnot(land(std::move(a), lnot(std::move(b))));
}

Formula Formula::iff(Formula a, Formula b) {
  Formula forward = implies(a, b);
  return land(std::move(forward), implies(std::move(b), std::move(a)));
}

Formula Formula::believes(int agent, Rat theta, Formula f) {
  if (theta < 0 || theta > 1)
    throw Error(ErrKind::ThresholdOutOfRange, rat_to_string(theta));
  auto n = std::make_shared<Node>();
  n->kind = Conn::Believes;
  n->agent = agent;
  n->theta = std::move(theta);
  n->depth = f.modal_depth() + 1;
  n->size = f.size() + 1;
  n->hash = mix(mix(mix(4, static_cast<std::size_t>(agent)), hash_rat(n->theta)),
                f.hash());
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

bool Formula::is_i_formula(int agent) const {
  switch (kind()) {
    case Conn::Atom: return false;
    case Conn::Not: return child().is_i_formula(agent);
    case Conn::And: return lhs().is_i_formula(agent) && rhs().is_i_formula(agent);
    case Conn::Believes: return this->agent() == agent;
  }
  return false;
}

std::string Formula::render() const {
  switch (kind()) {
    case Conn::Atom: return atom_name();
    case Conn::Not: return "!" + child().render();
    case Conn::And: return "(" + lhs().render() + " & " + rhs().render() + ")";
    case Conn::Believes:
      return "B{" + std::to_string(agent()) + "," + rat_to_string(theta()) + "} " +
             child().render();
  }
  return "";
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind)
    return false;
  switch (node_->kind) {
    case Conn::Atom: return node_->atom == other.node_->atom;
    case Conn::Not: return child() == other.child();
    case Conn::And: return lhs() == other.lhs() && rhs() == other.rhs();
    case Conn::Believes:
      return node_->agent == other.node_->agent &&
             node_->theta == other.node_->theta && child() == other.child();
  }
  return false;
}

std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vocab,
         int agent_count, const ThresholdSet& thresholds)
      : text_(text), vocab_(vocab), agents_(agent_count), thresholds_(thresholds) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw Error(ErrKind::Syntax, "at position " + std::to_string(pos_) +
                                     ": expected " + expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (eat("<->")) f = Formula::iff(std::move(f), parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    while (true) {
      skip_ws();
      if (text_.substr(pos_).starts_with("->")) {
        pos_ += 2;
        f = Formula::implies(std::move(f), parse_or());
      } else {
        return f;
      }
    }
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek('|')) {
      ++pos_;
      f = Formula::lor(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek('&')) {
      ++pos_;
      f = Formula::land(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("formula");
    if (text_[pos_] == '!') {
      ++pos_;
      return Formula::lnot(parse_unary());
    }
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!eat(")")) fail("')'");
      return f;
    }
    // "B{" starts a modality; a bare "B..." identifier is still an atom.
    if (text_[pos_] == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{')
      return parse_believes();
    return parse_atom();
  }

  Formula parse_believes() {
    pos_ += 2;  // "B{"
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("agent number");
    int agent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (agent < 1 || agent > agents_)
      throw Error(ErrKind::AgentOutOfRange,
                  "agent " + std::to_string(agent) + " with " +
                      std::to_string(agents_) + " agents declared");
    if (!eat(",")) fail("','");
    skip_ws();
    start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '/' || text_[pos_] == '.'))
      ++pos_;
    if (pos_ == start) fail("threshold");
    Rat theta = parse_rational(text_.substr(start, pos_ - start));
    if (theta < 0 || theta > 1)
      throw Error(ErrKind::ThresholdOutOfRange, rat_to_string(theta));
    if (!thresholds_.contains(theta))
      throw Error(ErrKind::ThresholdNotInSet, rat_to_string(theta));
    if (!eat("}")) fail("'}'");
    return Formula::believes(agent, std::move(theta), parse_unary());
  }

  Formula parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    auto ident_char = [](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos_ < text_.size() && ident_char(text_[pos_], pos_ == start)) ++pos_;
    if (pos_ == start) fail("atom");
    std::string name(text_.substr(start, pos_ - start));
    if (std::find(vocab_.begin(), vocab_.end(), name) == vocab_.end())
      throw Error(ErrKind::UnknownAtom, "'" + name + "'");
    return Formula::atom(std::move(name));
  }

  std::string_view text_;
  const std::vector<std::string>& vocab_;
  int agents_;
  const ThresholdSet& thresholds_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::vector<std::string>& vocab,
                      int agent_count, const ThresholdSet& thresholds) {
  if (text.empty()) throw Error(ErrKind::Syntax, "empty input");
  return Parser(text, vocab, agent_count, thresholds).parse();
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vocab,
                                        int agent_count,
                                        const ThresholdSet& thresholds,
                                        int max_depth, std::size_t max_size,
                                        std::size_t budget) {
  if (thresholds.dense)
    throw Error(ErrKind::NonDenseThresholds,
                "enumeration requires an explicit threshold set");
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  std::vector<Formula> out;
  auto emit = [&](Formula f, std::size_t s) {
    if (out.size() >= budget)
      throw Error(ErrKind::BudgetExceeded,
                  "formula enumeration exceeds budget of " + std::to_string(budget));
    out.push_back(f);
    by_size[s].push_back(std::move(f));
  };
  for (std::size_t s = 1; s <= max_size; ++s) {
    if (s == 1) {
      for (const auto& name : vocab) emit(Formula::atom(name), s);
      continue;
    }
    for (const Formula& g : by_size[s - 1]) emit(Formula::lnot(g), s);
    for (int i = 1; i <= agent_count; ++i)
      for (const Rat& theta : thresholds.values)
        for (const Formula& g : by_size[s - 1])
          if (g.modal_depth() < max_depth)
            emit(Formula::believes(i, theta, g), s);
    for (std::size_t ls = 1; ls + 1 < s; ++ls)
      for (const Formula& a : by_size[ls])
        for (const Formula& b : by_size[s - 1 - ls])
          emit(Formula::land(a, b), s);
  }
  return out;
}

}  // namespace belt
