#include "ogroup/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ogroup/errors.hpp"

namespace ogroup {

const char *axiom_name(Axiom axiom) {
  switch (axiom) {
  case Axiom::shape: return "shape";
  case Axiom::range: return "range";
  case Axiom::identity: return "identity";
  case Axiom::inverse: return "inverse";
  case Axiom::associativity: return "associativity";
  case Axiom::operator_shape: return "operator shape";
  case Axiom::operator_distributive: return "operator distributivity";
  case Axiom::duplicate_label: return "duplicate operator label";
  }
  return "unknown";
}

bool size_lex_less(const ElementSet &a, const ElementSet &b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb)
    return ca < cb;
  auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

struct Group::Data {
  std::size_t order;
  std::vector<Element> table;
  std::vector<Element> inverses;
  std::vector<Operator> operators;
  std::string name;
};

namespace {

[[noreturn]] void fail(Axiom axiom, const std::string &message) {
  throw InvalidGroup(axiom, message);
}

std::vector<Element> validate(std::size_t n, const std::vector<Element> &t,
                              const std::vector<Operator> &ops) {
  if (n == 0)
    fail(Axiom::shape, "empty table");
  if (t.size() != n * n)
    fail(Axiom::shape, "table is not square");

  for (std::size_t i = 0; i < n * n; ++i)
    if (t[i] >= n) {
      std::ostringstream os;
      os << "entry out of range at (" << i / n << ", " << i % n << ")";
      fail(Axiom::range, os.str());
    }

  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };

  for (std::size_t x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      fail(Axiom::identity, "element 0 is not a two-sided identity");

  std::vector<Element> inverses(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        inverses[x] = static_cast<Element>(y);
        found = true;
      }
    if (!found)
      fail(Axiom::inverse, "no inverse for element " + std::to_string(x));
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "not associative: (a*b)*c != a*(b*c) for a=" << a
             << ", b=" << b << ", c=" << c;
          fail(Axiom::associativity, os.str());
        }
    }

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Operator &op = ops[i];
    for (std::size_t j = 0; j < i; ++j)
      if (ops[j].label == op.label)
        fail(Axiom::duplicate_label, "duplicate operator label '" + op.label + "'");
    if (op.action.size() != n)
      fail(Axiom::operator_shape, "operator '" + op.label + "' has length " +
                                    std::to_string(op.action.size()) +
                                    ", expected " + std::to_string(n));
    for (Element v : op.action)
      if (v >= n)
        fail(Axiom::operator_shape,
             "operator '" + op.label + "' maps outside the group");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (op.action[at(x, y)] != at(op.action[x], op.action[y])) {
          std::ostringstream os;
          os << "operator '" << op.label
             << "' is not distributive: a(x*y) != a(x)*a(y) for x=" << x
             << ", y=" << y;
          fail(Axiom::operator_distributive, os.str());
        }
  }
  return inverses;
}

std::vector<std::vector<Element>> permutations(std::size_t n, bool even_only) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (p[i] > p[j])
            ++inversions;
      if (inversions % 2)
        continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group permutation_group(std::size_t degree, bool even_only, std::string name) {
  auto perms = permutations(degree, even_only);
  std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Element> prod(degree);
      for (std::size_t x = 0; x < degree; ++x)
        prod[x] = perms[i][perms[j][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      table[i * n + j] = static_cast<Element>(it - perms.begin());
    }
  return make_group(n, std::move(table), {}, std::move(name));
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > (std::size_t{1} << 40))
      break;
  }
  return f;
}

} // namespace

Group::Group()
  : Group(std::make_shared<const Data>(Data{1, {0}, {0}, {}, "trivial"})) {}

Group::Group(std::shared_ptr<const Data> data)
  : data_(std::move(data)), n_(data_->order), table_(data_->table.data()),
    inverses_(data_->inverses.data()) {}

std::size_t Group::order() const { return n_; }

Element Group::power(Element x, long long k) const {
  std::size_t ord = element_order(x);
  long long e = k % static_cast<long long>(ord);
  if (e < 0)
    e += static_cast<long long>(ord);
  Element r = 0;
  for (long long i = 0; i < e; ++i)
    r = multiply(r, x);
  return r;
}

std::size_t Group::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = multiply(y, x))
    ++k;
  return k;
}

std::span<const Element> Group::table() const { return data_->table; }
std::span<const Element> Group::inverses() const { return data_->inverses; }
std::span<const Operator> Group::operators() const { return data_->operators; }

const Operator *Group::find_operator(std::string_view label) const {
  for (const auto &op : data_->operators)
    if (op.label == label)
      return &op;
  return nullptr;
}

std::vector<std::string> Group::labels() const {
  std::vector<std::string> out;
  for (const auto &op : data_->operators)
    out.push_back(op.label);
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::has_labels_of(const Group &other) const {
  return labels() == other.labels();
}

const std::string &Group::name() const { return data_->name; }

Group Group::renamed(std::string name) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->name = std::move(name);
  return Group(std::move(copy));
}

bool Group::is_abelian() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (multiply(a, b) != multiply(b, a))
        return false;
  return true;
}

bool operator==(const Group &a, const Group &b) {
  if (a.data_ == b.data_)
    return true;
  return a.data_->table == b.data_->table &&
         a.data_->operators == b.data_->operators;
}

Group make_group(std::size_t order, std::vector<Element> table,
                 std::vector<Operator> operators, std::string name) {
  auto inverses = validate(order, table, operators);
  return Group(std::make_shared<const Group::Data>(
    Group::Data{order, std::move(table), std::move(inverses),
                std::move(operators), std::move(name)}));
}

Group build_from_table(const std::vector<std::vector<Element>> &table,
                       std::vector<Operator> operators, std::string name) {
  std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto &row : table) {
    if (row.size() != n)
      throw InvalidGroup(Axiom::shape, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group(n, std::move(flat), std::move(operators), std::move(name));
}

Group build_named(NamedKind kind, std::size_t n, const Limits &limits) {
  auto check = [&](std::size_t order) {
    if (order > limits.construction)
      throw CapExceeded("construction", limits.construction, order);
  };
  auto need_positive = [&] {
    if (n == 0)
      throw PreconditionError("group parameter must be positive");
  };

  switch (kind) {
  case NamedKind::cyclic: {
    need_positive();
    check(n);
    std::vector<Element> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t[i * n + j] = static_cast<Element>((i + j) % n);
    return make_group(n, std::move(t), {}, "cyclic " + std::to_string(n));
  }
  case NamedKind::symmetric:
    need_positive();
    check(factorial(n));
    return permutation_group(n, false, "symmetric " + std::to_string(n));
  case NamedKind::alternating:
    need_positive();
    check(n < 2 ? 1 : factorial(n) / 2);
    return permutation_group(n, true, "alternating " + std::to_string(n));
  case NamedKind::dihedral: {
    need_positive();
    std::size_t order = 2 * n;
    check(order);
    // (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d)
    std::vector<Element> t(order * order);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t a = x / n, b = x % n, c = y / n, d = y % n;
        std::size_t rot = (c ? (n - b) % n : b) + d;
        t[x * order + y] = static_cast<Element>(((a + c) % 2) * n + rot % n);
      }
    return make_group(order, std::move(t), {}, "dihedral " + std::to_string(n));
  }
  case NamedKind::klein4: {
    check(4);
    std::vector<Element> t(16);
    for (Element i = 0; i < 4; ++i)
      for (Element j = 0; j < 4; ++j)
        t[i * 4 + j] = i ^ j;
    return make_group(4, std::move(t), {}, "klein4");
  }
  }
  throw PreconditionError("unknown group kind");
}

Group trivial_group(const std::vector<std::string> &labels) {
  std::vector<Operator> ops;
  for (const auto &l : labels)
    ops.push_back({l, {0}});
  return make_group(1, {0}, std::move(ops), "trivial");
}

Group with_operator(const Group &g, Operator op) {
  std::vector<Operator> ops(g.operators().begin(), g.operators().end());
  ops.push_back(std::move(op));
  return make_group(g.order(), {g.table().begin(), g.table().end()},
                    std::move(ops), g.name());
}

Group with_inner_operators(const Group &g) {
  std::vector<Operator> ops(g.operators().begin(), g.operators().end());
  for (Element x = 0; x < g.order(); ++x) {
    Operator op{"inn" + std::to_string(x), std::vector<Element>(g.order())};
    for (Element y = 0; y < g.order(); ++y)
      op.action[y] = g.conjugate(x, y);
    if (const Operator *existing = g.find_operator(op.label)) {
      if (existing->action != op.action)
        throw PreconditionError("operator label '" + op.label +
                                "' already used with a different action");
      continue;
    }
    ops.push_back(std::move(op));
  }
  return make_group(g.order(), {g.table().begin(), g.table().end()},
                    std::move(ops), "inner " + g.name());
}

} // namespace ogroup
