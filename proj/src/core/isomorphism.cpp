#include "ogroup/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <openssl/evp.h>

#include "ogroup/detail/generators.hpp"
#include "ogroup/errors.hpp"
#include "ogroup/subgroup.hpp"

namespace ogroup {

namespace {

// Per-element data preserved by every operator isomorphism.
using Fingerprint = std::vector<std::size_t>;

std::vector<Fingerprint> fingerprints(const Group &g) {
  std::vector<const Operator *> ops;
  for (const Operator &op : g.operators())
    ops.push_back(&op);
  std::sort(ops.begin(), ops.end(),
            [](auto *a, auto *b) { return a->label < b->label; });

  std::vector<Fingerprint> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t centralizer_size = 0;
    ElementSet klass(g.order());
    for (Element y = 0; y < g.order(); ++y) {
      if (g.multiply(x, y) == g.multiply(y, x))
        ++centralizer_size;
      klass.insert(g.conjugate(y, x));
    }
    std::array<Element, 1> single{x};
    Fingerprint f{g.element_order(x), centralizer_size, klass.count(),
                  generated_subgroup(g, single).order()};
    for (const Operator *op : ops) {
      f.push_back(op->action[x] == x);
      f.push_back(g.element_order(op->action[x]));
    }
    out[x] = std::move(f);
  }
  return out;
}

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

class Reader {
public:
  explicit Reader(const std::vector<std::uint8_t> &bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::string text(std::size_t len) {
    need(len);
    std::string s(bytes_.begin() + pos_, bytes_.begin() + pos_ + len);
    pos_ += len;
    return s;
  }
  bool done() const { return pos_ == bytes_.size(); }

private:
  void need(std::size_t k) {
    if (pos_ + k > bytes_.size())
      throw PreconditionError("truncated group encoding");
  }
  const std::vector<std::uint8_t> &bytes_;
  std::size_t pos_ = 0;
};

std::vector<const Operator *> ops_by_label(const Group &g) {
  std::vector<const Operator *> ops;
  for (const Operator &op : g.operators())
    ops.push_back(&op);
  std::sort(ops.begin(), ops.end(),
            [](auto *a, auto *b) { return a->label < b->label; });
  return ops;
}

// Lexicographically least (table, operators) over relabelings fixing 0.
//
// Rows 0 and column 0 are the same for every relabeling. Row 1 is the left
// multiplication by a = inv[1]; walking it column by column either meets an
// element that is still unlabeled, which must then take the next free label
// (any other choice makes this entry larger), or needs the preimage of a
// label not yet assigned, which is a genuine choice and branches. Once row 1
// is complete every element is labeled.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Group &g)
    : g_(g), n_(g.order()), ops_(ops_by_label(g)), label_(n_, unset) {}

  std::vector<Element> run() {
    assign(0);
    if (n_ == 1)
      leaf();
    else
      walk(1);
    return best_;
  }

private:
  static constexpr Element unset = ~Element{0};

  void assign(Element x) {
    label_[x] = static_cast<Element>(inv_.size());
    inv_.push_back(x);
  }

  void undo(std::size_t mark) {
    while (inv_.size() > mark) {
      label_[inv_.back()] = unset;
      inv_.pop_back();
    }
  }

  void walk(std::size_t j) {
    for (; j < n_; ++j) {
      if (j >= inv_.size()) {
        for (Element b = 1; b < n_; ++b) {
          if (label_[b] != unset)
            continue;
          std::size_t mark = inv_.size();
          assign(b);
          if (!dominated())
            walk(j);
          undo(mark);
        }
        return;
      }
      Element p = g_.multiply(inv_[1], inv_[j]);
      if (label_[p] == unset)
        assign(p);
    }
    leaf();
  }

  // True when every completion of the current partial labeling is strictly
  // larger than the best encoding found so far.
  bool dominated() const {
    if (best_.empty())
      return false;
    const std::size_t next = inv_.size();
    for (std::size_t i = 1; i < n_; ++i) {
      if (i >= next)
        return false;
      for (std::size_t j = 1; j < n_; ++j) {
        if (j >= next)
          return false;
        Element v = label_[g_.multiply(inv_[i], inv_[j])];
        Element b = best_[i * n_ + j];
        if (v == unset)
          return b < next;
        if (v != b)
          return v > b;
      }
    }
    return false;
  }

  void leaf() {
    std::vector<Element> enc;
    enc.reserve(n_ * n_ + ops_.size() * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        enc.push_back(label_[g_.multiply(inv_[i], inv_[j])]);
    for (const Operator *op : ops_)
      for (std::size_t i = 0; i < n_; ++i)
        enc.push_back(label_[op->action[inv_[i]]]);
    if (best_.empty() || enc < best_)
      best_ = std::move(enc);
  }

  const Group &g_;
  std::size_t n_;
  std::vector<const Operator *> ops_;
  std::vector<Element> label_;
  std::vector<Element> inv_;
  std::vector<Element> best_;
};

} // namespace

std::optional<OmegaMorphism> are_isomorphic(const Group &g, const Group &h) {
  if (g.order() != h.order() || g.labels() != h.labels())
    return std::nullopt;

  auto fg = fingerprints(g);
  auto fh = fingerprints(h);
  {
    auto sg = fg, sh = fh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh)
      return std::nullopt;
  }

  auto gens = detail::generating_sequence(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element y = 0; y < h.order(); ++y)
      if (fh[y] == fg[gens[k]])
        candidates[k].push_back(y);

  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;

  auto search = [&](auto &&self, std::size_t k) -> void {
    if (found)
      return;
    if (k == gens.size()) {
      auto map = detail::extend_to_hom(g, h, gens, images);
      if (!map)
        return;
      ElementSet hit(h.order());
      for (Element v : *map)
        if (!hit.insert(v))
          return;
      if (detail::commutes_with_operators(g, h, *map))
        found = std::move(map);
      return;
    }
    for (Element y : candidates[k]) {
      images[k] = y;
      self(self, k + 1);
    }
  };
  search(search, 0);

  if (!found)
    return std::nullopt;
  return OmegaMorphism(g, h, std::move(*found));
}

std::vector<std::uint8_t> encode_group(const Group &g) {
  std::vector<std::uint8_t> out;
  std::size_t n = g.order();
  put_u32(out, static_cast<std::uint32_t>(n));
  for (Element v : g.table())
    put_u32(out, v);
  auto ops = ops_by_label(g);
  put_u32(out, static_cast<std::uint32_t>(ops.size()));
  for (const Operator *op : ops) {
    put_u32(out, static_cast<std::uint32_t>(op->label.size()));
    out.insert(out.end(), op->label.begin(), op->label.end());
    for (Element v : op->action)
      put_u32(out, v);
  }
  return out;
}

Group decode_group(const std::vector<std::uint8_t> &bytes) {
  Reader r(bytes);
  std::size_t n = r.u32();
  if (n == 0 || n > (1u << 12))
    throw PreconditionError("group encoding has an implausible order");
  std::vector<Element> table(n * n);
  for (auto &v : table)
    v = r.u32();
  std::size_t k = r.u32();
  std::vector<Operator> ops;
  for (std::size_t i = 0; i < k; ++i) {
    Operator op;
    op.label = r.text(r.u32());
    op.action.resize(n);
    for (auto &v : op.action)
      v = r.u32();
    ops.push_back(std::move(op));
  }
  if (!r.done())
    throw PreconditionError("trailing bytes after group encoding");
  return make_group(n, std::move(table), std::move(ops), "canonical");
}

std::string sha256_hex(const std::vector<std::uint8_t> &bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 computation failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

Certificate::Certificate(std::vector<std::uint8_t> encoding)
  : encoding_(std::move(encoding)), digest_(sha256_hex(encoding_)) {}

std::size_t Certificate::order() const {
  Reader r(encoding_);
  return r.u32();
}

Certificate certificate(const Group &g, const Limits &limits) {
  if (g.order() > limits.certificate)
    throw CapExceeded("certificate", limits.certificate, g.order());

  std::vector<Element> best = CanonicalSearch(g).run();
  std::size_t n = g.order();
  auto ops = ops_by_label(g);

  std::vector<std::uint8_t> out;
  put_u32(out, static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n * n; ++i)
    put_u32(out, best[i]);
  put_u32(out, static_cast<std::uint32_t>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    put_u32(out, static_cast<std::uint32_t>(ops[k]->label.size()));
    out.insert(out.end(), ops[k]->label.begin(), ops[k]->label.end());
    for (std::size_t i = 0; i < n; ++i)
      put_u32(out, best[n * n + k * n + i]);
  }
  return Certificate(std::move(out));
}

bool same_class(const Group &g, const Group &h, const Limits &limits) {
  if (g.order() != h.order() || g.labels() != h.labels())
    return false;
  if (g.order() <= limits.certificate)
    return certificate(g, limits) == certificate(h, limits);
  return are_isomorphic(g, h).has_value();
}

} // namespace ogroup
