#include "calcat/space.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

#include "calcat/errors.hpp"

namespace calcat {

namespace {

std::string style_tag(Space::MSetStyle s) {
  switch (s) {
    case Space::MSetStyle::Monomial: return "m";
    case Space::MSetStyle::Bag: return "b";
    case Space::MSetStyle::Braces: return "s";
  }
  return "?";
}

}  // namespace

SpacePtr Space::unit() {
  struct S : Space {
    S() : Space(Kind::Unit, MSetStyle::Braces, {}, {}, "I") {}
  };
  static const SpacePtr u = std::make_shared<S>();
  return u;
}

namespace {
struct SpaceNode : Space {
  SpaceNode(Kind k, MSetStyle st, std::vector<SpacePtr> f,
            std::vector<std::pair<int, std::string>> a, std::string key)
      : Space(k, st, std::move(f), std::move(a), std::move(key)) {}
};
}  // namespace

SpacePtr Space::atoms(std::vector<std::pair<int, std::string>> named, std::string label) {
  return std::make_shared<SpaceNode>(Kind::Atoms, MSetStyle::Braces, std::vector<SpacePtr>{},
                                     std::move(named), "at(" + label + ")");
}

SpacePtr Space::tensor(std::vector<SpacePtr> factors) {
  std::vector<SpacePtr> flat;
  for (auto& f : factors) {
    if (f->kind() == Kind::Unit) continue;
    if (f->kind() == Kind::Tensor) {
      for (auto& g : f->factors()) flat.push_back(g);
    } else {
      flat.push_back(f);
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat[0];
  std::string key = "(";
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i) key += "*";
    key += flat[i]->key();
  }
  key += ")";
  return std::make_shared<SpaceNode>(Kind::Tensor, MSetStyle::Braces, std::move(flat),
                                     std::vector<std::pair<int, std::string>>{}, std::move(key));
}

SpacePtr Space::mset_of(SpacePtr letters, MSetStyle style) {
  std::string key = "mset" + style_tag(style) + "(" + letters->key() + ")";
  return std::make_shared<SpaceNode>(Kind::MSetOf, style, std::vector<SpacePtr>{std::move(letters)},
                                     std::vector<std::pair<int, std::string>>{}, std::move(key));
}

SpacePtr Space::rb_pair(SpacePtr mono_space) {
  std::string key = "rb(" + mono_space->key() + ")";
  return std::make_shared<SpaceNode>(Kind::RBPair, MSetStyle::Braces,
                                     std::vector<SpacePtr>{std::move(mono_space)},
                                     std::vector<std::pair<int, std::string>>{}, std::move(key));
}

SpacePtr Space::empty(std::string label) {
  return std::make_shared<SpaceNode>(Kind::Empty, MSetStyle::Braces, std::vector<SpacePtr>{},
                                     std::vector<std::pair<int, std::string>>{},
                                     "0(" + label + ")");
}

int Space::arity() const {
  switch (kind_) {
    case Kind::Unit: return 0;
    case Kind::Tensor: return static_cast<int>(factors_.size());
    default: return 1;
  }
}

void Space::enum_into(const EnumBudget& budget, std::vector<BasisPtr>& out) const {
  switch (kind_) {
    case Kind::Empty:
      return;
    case Kind::Unit:
      out.push_back(unit_basis());
      return;
    case Kind::Atoms: {
      if (budget.max_grade < 1) return;
      for (const auto& [id, name] : atoms_) {
        (void)name;
        out.push_back(Basis::atom(id, 1));
      }
      return;
    }
    case Kind::Tensor: {
      // cartesian product under the shared grade budget
      std::vector<std::vector<BasisPtr>> per;
      per.reserve(factors_.size());
      for (const auto& f : factors_) per.push_back(f->enumerate(budget));
      std::vector<BasisPtr> slot(factors_.size());
      std::function<void(size_t, int)> rec = [&](size_t i, int grade_left) {
        if (i == factors_.size()) {
          std::vector<BasisPtr> kids = slot;
          out.push_back(Basis::tuple(std::move(kids)));
          return;
        }
        for (const auto& b : per[i]) {
          if (b->grade() > grade_left) continue;
          slot[i] = b;
          rec(i + 1, grade_left - b->grade());
        }
      };
      rec(0, budget.max_grade);
      return;
    }
    case Kind::MSetOf: {
      std::vector<BasisPtr> letters = factors_[0]->enumerate(budget);
      std::vector<BasisPtr> cur;
      std::function<void(size_t, int, int)> rec = [&](size_t i, int grade_left, int zeros_left) {
        out.push_back(Basis::mset(cur));
        for (size_t j = i; j < letters.size(); ++j) {
          int g = letters[j]->grade();
          if (g > grade_left) continue;
          if (g == 0 && zeros_left == 0) continue;
          cur.push_back(letters[j]);
          rec(j, grade_left - g, zeros_left - (g == 0 ? 1 : 0));
          cur.pop_back();
        }
      };
      rec(0, budget.max_grade, budget.max_zero_letters);
      return;
    }
    case Kind::RBPair: {
      std::vector<BasisPtr> monos = factors_[0]->enumerate(budget);
      // words over monos (order significant), then the monomial slot
      std::vector<BasisPtr> cur;
      std::function<void(int, int)> rec = [&](int grade_left, int zeros_left) {
        for (const auto& m : monos) {
          if (m->grade() > grade_left) continue;
          out.push_back(Basis::tuple({Basis::word(cur), m}));
        }
        for (const auto& l : monos) {
          int g = l->grade();
          if (g > grade_left) continue;
          if (g == 0 && zeros_left == 0) continue;
          cur.push_back(l);
          rec(grade_left - g, zeros_left - (g == 0 ? 1 : 0));
          cur.pop_back();
        }
      };
      rec(budget.max_grade, budget.max_zero_letters);
      return;
    }
  }
}

std::vector<BasisPtr> Space::enumerate(const EnumBudget& budget) const {
  std::vector<BasisPtr> out;
  enum_into(budget, out);
  std::sort(out.begin(), out.end(), basis_lt);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const BasisPtr& a, const BasisPtr& b) { return basis_eq(a, b); }),
            out.end());
  return out;
}

namespace {

const std::string* atom_name(const std::vector<std::pair<int, std::string>>& table, int id) {
  for (const auto& [i, n] : table) {
    if (i == id) return &n;
  }
  return nullptr;
}

// Collects the atom tables of every Atoms space reachable from s.
void collect_atoms(const Space& s, std::vector<std::pair<int, std::string>>& out) {
  if (s.kind() == Space::Kind::Atoms) {
    for (const auto& p : s.atom_table()) out.push_back(p);
  }
  for (const auto& f : s.factors()) collect_atoms(*f, out);
}

}  // namespace

void Space::print_elem(std::ostream& os, const BasisPtr& b) const {
  switch (kind_) {
    case Kind::Empty:
      os << "<empty>";
      return;
    case Kind::Unit:
      os << "*";
      return;
    case Kind::Atoms: {
      const std::string* n = atom_name(atoms_, b->atom_id());
      os << (n ? *n : "?");
      return;
    }
    case Kind::Tensor: {
      auto slots = slots_of(b, arity());
      for (size_t i = 0; i < slots.size(); ++i) {
        if (i) os << " (x) ";
        factors_[i]->print_elem(os, slots[i]);
      }
      return;
    }
    case Kind::MSetOf: {
      const auto& kids = b->kids();
      if (style_ == MSetStyle::Bag) {
        os << "[";
        for (size_t i = 0; i < kids.size(); ++i) {
          if (i) os << ",";
          factors_[0]->print_elem(os, kids[i]);
        }
        os << "]";
        return;
      }
      if (style_ == MSetStyle::Monomial) {
        if (kids.empty()) {
          os << "1";
          return;
        }
        size_t i = 0;
        bool first = true;
        while (i < kids.size()) {
          size_t j = i;
          while (j < kids.size() && basis_eq(kids[i], kids[j])) ++j;
          if (!first) os << " ";
          first = false;
          factors_[0]->print_elem(os, kids[i]);
          if (j - i > 1) os << "^" << (j - i);
          i = j;
        }
        return;
      }
      os << "{";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) os << ", ";
        factors_[0]->print_elem(os, kids[i]);
      }
      os << "}";
      return;
    }
    case Kind::RBPair: {
      const auto& w = b->kids()[0];
      const auto& m = b->kids()[1];
      os << "(<";
      for (size_t i = 0; i < w->kids().size(); ++i) {
        if (i) os << ",";
        factors_[0]->print_elem(os, w->kids()[i]);
      }
      os << ">, ";
      factors_[0]->print_elem(os, m);
      os << ")";
      return;
    }
  }
}

std::string Space::elem_str(const BasisPtr& b) const {
  std::ostringstream os;
  print_elem(os, b);
  return os.str();
}

namespace {
void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}
}  // namespace

BasisPtr Space::parse_at(const std::string& s, size_t& pos) const {
  skip_ws(s, pos);
  switch (kind_) {
    case Kind::Empty:
      throw ParseError(pos, "the zero space has no basis elements");
    case Kind::Unit:
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        return unit_basis();
      }
      throw ParseError(pos, "expected `*` (unit token)");
    case Kind::Atoms: {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (const auto& [id, n] : atoms_) {
        if (n == name) return Basis::atom(id, 1);
      }
      throw ParseError(start, "unknown element `" + name + "`");
    }
    case Kind::Tensor: {
      std::vector<BasisPtr> slots;
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) {
          skip_ws(s, pos);
          if (s.compare(pos, 3, "(x)") != 0) throw ParseError(pos, "expected tensor separator `(x)`");
          pos += 3;
        }
        slots.push_back(factors_[i]->parse_at(s, pos));
      }
      return Basis::tuple(std::move(slots));
    }
    case Kind::MSetOf: {
      if (style_ == MSetStyle::Bag) {
        if (pos >= s.size() || s[pos] != '[') throw ParseError(pos, "expected `[`");
        ++pos;
        std::vector<BasisPtr> kids;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == ']') {
          ++pos;
          return Basis::mset({});
        }
        while (true) {
          kids.push_back(factors_[0]->parse_at(s, pos));
          skip_ws(s, pos);
          if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < s.size() && s[pos] == ']') {
            ++pos;
            break;
          }
          throw ParseError(pos, "expected `,` or `]`");
        }
        return Basis::mset(std::move(kids));
      }
      if (style_ == MSetStyle::Braces) {
        if (pos >= s.size() || s[pos] != '{') throw ParseError(pos, "expected `{`");
        ++pos;
        std::vector<BasisPtr> kids;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '}') {
          ++pos;
          return Basis::mset({});
        }
        while (true) {
          kids.push_back(factors_[0]->parse_at(s, pos));
          skip_ws(s, pos);
          if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < s.size() && s[pos] == '}') {
            ++pos;
            break;
          }
          throw ParseError(pos, "expected `,` or `}`");
        }
        return Basis::mset(std::move(kids));
      }
      // Monomial style: `1` or letter(^k) (letter(^k))* separated by spaces
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '1') {
        ++pos;
        return Basis::mset({});
      }
      std::vector<BasisPtr> kids;
      while (true) {
        skip_ws(s, pos);
        if (pos >= s.size() ||
            !(std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '{' ||
              s[pos] == '[' || s[pos] == '*'))
          break;
        BasisPtr letter = factors_[0]->parse_at(s, pos);
        int count = 1;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          size_t start = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (start == pos) throw ParseError(pos, "expected exponent");
          count = std::stoi(s.substr(start, pos - start));
        }
        for (int i = 0; i < count; ++i) kids.push_back(letter);
        if (kids.empty()) throw ParseError(pos, "expected a monomial");
      }
      if (kids.empty()) throw ParseError(pos, "expected a monomial");
      return Basis::mset(std::move(kids));
    }
    case Kind::RBPair: {
      if (pos >= s.size() || s[pos] != '(') throw ParseError(pos, "expected `(`");
      ++pos;
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != '<') throw ParseError(pos, "expected `<`");
      ++pos;
      std::vector<BasisPtr> letters;
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '>') {
        ++pos;
      } else {
        while (true) {
          letters.push_back(factors_[0]->parse_at(s, pos));
          skip_ws(s, pos);
          if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < s.size() && s[pos] == '>') {
            ++pos;
            break;
          }
          throw ParseError(pos, "expected `,` or `>`");
        }
      }
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != ',') throw ParseError(pos, "expected `,`");
      ++pos;
      BasisPtr mono = factors_[0]->parse_at(s, pos);
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != ')') throw ParseError(pos, "expected `)`");
      ++pos;
      return Basis::tuple({Basis::word(std::move(letters)), mono});
    }
  }
  throw ParseError(pos, "cannot parse element");
}

BasisPtr Space::parse_elem(const std::string& text) const {
  size_t pos = 0;
  BasisPtr b = parse_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing input after basis element");
  return b;
}

}  // namespace calcat
