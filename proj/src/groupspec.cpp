#include "subdepth/groupspec.hpp"

#include <cctype>

#include "subdepth/builtin.hpp"
#include "subdepth/error.hpp"

namespace subdepth {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(text_.substr(start, pos_ - start));
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // 'x' separates factors only when followed by a non-identifier character
  bool at_times() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'x') return false;
    return pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  GroupSpec parse_product() {
    GroupSpec left = parse_term();
    while (at_times()) {
      ++pos_;
      GroupSpec product;
      product.kind = GroupSpec::Kind::Product;
      product.children = {std::move(left), parse_term()};
      left = std::move(product);
    }
    return left;
  }

  GroupSpec parameterized(GroupSpec::Kind kind) {
    expect('(');
    GroupSpec spec;
    spec.kind = kind;
    const std::size_t at = pos_;
    spec.n = number();
    if (spec.n == 0) {
      pos_ = at;
      fail("parameter must be positive");
    }
    expect(')');
    return spec;
  }

  GroupSpec parse_term() {
    if (peek('(')) {
      ++pos_;
      GroupSpec inner = parse_product();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    const std::string name = word();
    if (name == "S") return parameterized(GroupSpec::Kind::Symmetric);
    if (name == "A") return parameterized(GroupSpec::Kind::Alternating);
    if (name == "C") return parameterized(GroupSpec::Kind::Cyclic);
    if (name == "D") return parameterized(GroupSpec::Kind::Dihedral);
    if (name == "Klein") return GroupSpec{GroupSpec::Kind::Klein, 0, {}, {}};
    if (name == "G108") return GroupSpec{GroupSpec::Kind::G108, 0, {}, {}};
    if (name == "diag") {
      expect('(');
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::Diagonal;
      spec.children.push_back(parse_product());
      expect(')');
      return spec;
    }
    if (name == "perm") return parse_perm();
    pos_ = start;
    fail(name.empty() ? "expected a group" : "unknown group '" + name + "'");
  }

  GroupSpec parse_perm() {
    expect('(');
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Perm;
    spec.n = number();
    expect(';');
    do {
      std::vector<std::vector<std::size_t>> cycles;
      if (!peek('(')) fail("expected a cycle");
      while (peek('(')) {
        ++pos_;
        std::vector<std::size_t> cycle;
        skip_space();
        while (!peek(')')) {
          const std::size_t at = pos_;
          const std::size_t point = number();
          if (point == 0 || point > spec.n) {
            pos_ = at;
            throw Error(ErrorCode::DegreeViolation, "at position " + std::to_string(at) + ": point " +
                                                        std::to_string(point) + " outside 1.." + std::to_string(spec.n));
          }
          cycle.push_back(point);
          if (peek(',')) ++pos_;
        }
        ++pos_;
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
      }
      spec.generators.push_back(std::move(cycles));
    } while (peek(',') && (++pos_, true));
    expect(')');
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string print_cycles(const std::vector<std::vector<std::size_t>>& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ")";
  }
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_group_spec(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Symmetric: return "S(" + std::to_string(spec.n) + ")";
    case K::Alternating: return "A(" + std::to_string(spec.n) + ")";
    case K::Cyclic: return "C(" + std::to_string(spec.n) + ")";
    case K::Dihedral: return "D(" + std::to_string(spec.n) + ")";
    case K::Klein: return "Klein";
    case K::G108: return "G108";
    case K::Diagonal: return "diag(" + print_group_spec(spec.children[0]) + ")";
    case K::Product: {
      std::string right = print_group_spec(spec.children[1]);
      if (spec.children[1].kind == K::Product) right = "(" + right + ")";
      return print_group_spec(spec.children[0]) + " x " + right;
    }
    case K::Perm: {
      std::string out = "perm(" + std::to_string(spec.n) + ";";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        out += (i ? ", " : " ") + print_cycles(spec.generators[i]);
      }
      return out + ")";
    }
  }
  return {};
}

PermutationGroup build_group(const GroupSpec& spec, std::size_t order_cap) {
  using K = GroupSpec::Kind;
  const std::string label = print_group_spec(spec);
  switch (spec.kind) {
    case K::Symmetric: return builtin::symmetric(spec.n, order_cap);
    case K::Alternating: return builtin::alternating(spec.n, order_cap);
    case K::Cyclic: return builtin::cyclic(spec.n, order_cap);
    case K::Dihedral: return builtin::dihedral(spec.n, order_cap);
    case K::Klein: return builtin::klein();
    case K::G108: return builtin::g108();
    case K::Product:
      return direct_product(build_group(spec.children[0], order_cap), build_group(spec.children[1], order_cap),
                            order_cap)
          .with_label(label);
    case K::Diagonal:
      return diagonal_subgroup(build_group(spec.children[0], order_cap), order_cap).subgroup.with_label(label);
    case K::Perm: {
      std::vector<Permutation> gens;
      for (const auto& cycles : spec.generators) gens.push_back(Permutation::from_cycles(spec.n, cycles));
      return PermutationGroup::generate(spec.n, std::move(gens), label, order_cap);
    }
  }
  throw Error(ErrorCode::UnknownConstructor, "unknown group constructor");
}

}  // namespace subdepth
