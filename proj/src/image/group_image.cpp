#include "thinlab/image/group_image.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace thinlab {

namespace detail {

namespace {

inline std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_key(std::uint64_t k) { return mix(k); }
inline std::uint64_t hash_key(const std::string& k) { return mix(std::hash<std::string>{}(k)); }

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

}  // namespace

template <typename Key>
std::size_t KeyTable<Key>::slot_for(const Key& k) const {
  std::size_t s = hash_key(k) & mask_;
  while (slots_[s] != kEmpty && !(keys_[slots_[s]] == k)) s = (s + 1) & mask_;
  return s;
}

template <typename Key>
std::optional<std::size_t> KeyTable<Key>::find(const Key& k) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t s = slot_for(k);
  if (slots_[s] == kEmpty) return std::nullopt;
  return slots_[s];
}

template <typename Key>
void KeyTable<Key>::grow() {
  const std::size_t cap = slots_.empty() ? 1024 : slots_.size() * 2;
  slots_.assign(cap, kEmpty);
  mask_ = cap - 1;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    std::size_t s = hash_key(keys_[i]) & mask_;
    while (slots_[s] != kEmpty) s = (s + 1) & mask_;
    slots_[s] = static_cast<std::uint32_t>(i);
  }
}

template <typename Key>
std::size_t KeyTable<Key>::insert(const Key& k, bool& inserted) {
  if ((keys_.size() + 1) * 2 > slots_.size()) grow();
  const std::size_t s = slot_for(k);
  if (slots_[s] != kEmpty) {
    inserted = false;
    return slots_[s];
  }
  if (keys_.size() >= kEmpty) throw CapExceededError("element table exceeds 2^32 entries");
  slots_[s] = static_cast<std::uint32_t>(keys_.size());
  keys_.push_back(k);
  inserted = true;
  return keys_.size() - 1;
}

template class KeyTable<std::uint64_t>;
template class KeyTable<std::string>;

}  // namespace detail

namespace {

// True when m^(digits) <= 2^64 - 1.
bool fits_u64(std::uint64_t m, std::size_t digits) {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    acc *= m;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  return true;
}

}  // namespace

std::uint64_t GroupImage::encode(std::span<const Residue> residues) const {
  std::uint64_t key = 0;
  for (Residue r : residues) key = key * modulus_ + r;
  return key;
}

std::string GroupImage::encode_bytes(std::span<const Residue> residues) const {
  return std::string(reinterpret_cast<const char*>(residues.data()), residues.size_bytes());
}

std::size_t GroupImage::order() const {
  return std::visit([](const auto& t) { return t.size(); }, table_);
}

void GroupImage::element_into(std::size_t index, std::span<Residue> out) const {
  const std::size_t digits = n_ * n_;
  if (const auto* t = std::get_if<detail::KeyTable<std::uint64_t>>(&table_)) {
    std::uint64_t key = t->key(index);
    for (std::size_t i = digits; i-- > 0;) {
      out[i] = static_cast<Residue>(key % modulus_);
      key /= modulus_;
    }
  } else {
    const std::string& key = std::get<detail::KeyTable<std::string>>(table_).key(index);
    std::copy_n(reinterpret_cast<const Residue*>(key.data()), digits, out.begin());
  }
}

ModMatrix GroupImage::element(std::size_t index) const {
  if (index >= order()) throw std::out_of_range("element index out of range");
  std::vector<Residue> r(n_ * n_);
  element_into(index, r);
  return ModMatrix(n_, modulus_, std::move(r));
}

std::optional<std::size_t> GroupImage::index_of(std::span<const Residue> residues) const {
  if (const auto* t = std::get_if<detail::KeyTable<std::uint64_t>>(&table_)) {
    return t->find(encode(residues));
  }
  return std::get<detail::KeyTable<std::string>>(table_).find(encode_bytes(residues));
}

std::optional<std::size_t> GroupImage::index_of(const ModMatrix& m) const {
  if (m.dim() != n_ || m.modulus() != modulus_) return std::nullopt;
  return index_of(m.entries());
}

Word GroupImage::witness(std::size_t index) const {
  std::vector<Letter> letters;
  while (index != 0) {
    letters.push_back(letters_[via_[index]]);
    index = parent_[index];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

std::size_t GroupImage::depth(std::size_t index) const {
  std::size_t d = 0;
  while (index != 0) {
    index = parent_[index];
    ++d;
  }
  return d;
}

GroupImage GroupImage::enumerate(const GeneratorSet& gens, std::uint64_t modulus, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("element cap must be at least 1");
  if (gens.symbols().size() > 255) throw std::invalid_argument("too many generators");
  GroupImage img;
  img.gens_ = gens;
  img.modulus_ = modulus;
  img.n_ = gens.dim();
  img.letters_ = gens.symbols();
  for (const Letter& l : img.letters_) img.symbols_.push_back(reduce_mod(gens.letter(l), modulus));
  const std::size_t digits = img.n_ * img.n_;
  if (fits_u64(modulus, digits)) {
    img.table_ = detail::KeyTable<std::uint64_t>{};
  } else {
    img.table_ = detail::KeyTable<std::string>{};
  }

  std::visit(
      [&](auto& table) {
        using Table = std::decay_t<decltype(table)>;
        auto key_of = [&](std::span<const Residue> r) {
          if constexpr (std::is_same_v<Table, detail::KeyTable<std::uint64_t>>) {
            return img.encode(r);
          } else {
            return img.encode_bytes(r);
          }
        };
        const ModMatrix id = ModMatrix::identity(img.n_, modulus);
        bool inserted = false;
        table.insert(key_of(id.entries()), inserted);
        img.parent_.push_back(0);
        img.via_.push_back(0);
        img.complete_ = true;

        std::vector<Residue> cur(digits), next(digits);
        for (std::size_t i = 0; i < table.size(); ++i) {
          img.element_into(i, cur);
          for (std::size_t s = 0; s < img.symbols_.size(); ++s) {
            mod_mul_into(cur, img.symbols_[s].entries(), img.n_, modulus, next);
            const auto key = key_of(next);
            if (table.find(key)) continue;
            if (table.size() >= cap) {
              img.complete_ = false;
              return;
            }
            table.insert(key, inserted);
            img.parent_.push_back(static_cast<std::uint32_t>(i));
            img.via_.push_back(static_cast<std::uint8_t>(s));
          }
        }
      },
      img.table_);
  return img;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer sl_order(std::size_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sl_order needs a prime, got " + std::to_string(p));
  Integer pp = static_cast<unsigned long>(p);
  Integer order;
  mpz_pow_ui(order.get_mpz_t(), pp.get_mpz_t(), n * (n - 1) / 2);
  for (std::size_t k = 2; k <= n; ++k) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), k);
    order *= pk - 1;
  }
  return order;
}

Integer gl_order(std::size_t n, std::uint64_t p) {
  return sl_order(n, p) * Integer(static_cast<unsigned long>(p - 1));
}

ImageVerdict surjectivity_of(const GroupImage& image) {
  const std::uint64_t p = image.modulus();
  ImageVerdict v;
  v.prime = p;
  v.image_order = image.order();
  v.target_order = sl_order(image.dim(), p);
  const GeneratorSet& gens = image.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (reduce_mod(gens.generator(i), p).det() != 1) {
      v.surjective = Surjectivity::No;
      v.reason = "determinant obstruction: generator " + gens.names()[i] +
                 " has determinant != 1 mod " + std::to_string(p);
      return v;
    }
  }
  if (!image.complete()) {
    v.surjective = Surjectivity::Capped;
    v.reason = "element cap reached before closure";
    return v;
  }
  if (Integer(static_cast<unsigned long>(v.image_order)) == v.target_order) {
    v.surjective = Surjectivity::Yes;
    return v;
  }
  v.surjective = Surjectivity::No;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (reduce_mod(gens.generator(i), p).is_identity()) {
      v.reason = "collapsed generator: " + gens.names()[i] + " reduces to the identity mod " +
                 std::to_string(p);
      return v;
    }
  }
  v.reason = "proper subgroup of order " + std::to_string(v.image_order);
  return v;
}

ImageVerdict is_surjective(const GeneratorSet& gens, std::uint64_t p, std::size_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("surjectivity is decided for primes only");
  // Capped enumerations are pointless when the target order already exceeds the cap.
  if (sl_order(gens.dim(), p) > Integer(static_cast<unsigned long>(cap))) {
    ImageVerdict v;
    v.surjective = Surjectivity::Capped;
    v.prime = p;
    v.target_order = sl_order(gens.dim(), p);
    v.reason = "target order exceeds element cap";
    return v;
  }
  return surjectivity_of(GroupImage::enumerate(gens, p, cap));
}

namespace {

std::optional<std::string> determinant_obstruction(const GeneratorSet& gens, std::uint64_t m,
                                                   const ModMatrix& target) {
  bool unimodular = true;
  for (const auto& g : gens.generators()) {
    const Integer d = det(g);
    unimodular = unimodular && (d == 1 || d == -1);
  }
  if (!unimodular) return std::nullopt;
  const Residue d = target.det();
  if (d == 1 || d == m - 1) return std::nullopt;
  return "determinant obstruction: det = " + std::to_string(d) + " mod " + std::to_string(m) +
         " is not in {+1, -1}";
}

}  // namespace

MembershipResult contains(const GroupImage& image, const ModMatrix& target) {
  MembershipResult r;
  if (auto why = determinant_obstruction(image.generators(), image.modulus(), target)) {
    r.status = Membership::No;
    r.reason = *why;
    return r;
  }
  r.index = image.index_of(target);
  if (r.index) {
    r.status = Membership::Yes;
  } else if (!image.complete()) {
    r.status = Membership::Capped;
    r.reason = "element cap reached before the target was found";
  } else {
    r.status = Membership::No;
    r.reason = "not in the image (closure of order " + std::to_string(image.order()) + ")";
  }
  return r;
}

MembershipResult contains_mod(const GeneratorSet& gens, std::uint64_t modulus,
                              const ModMatrix& target, std::size_t cap) {
  if (target.modulus() != modulus || target.dim() != gens.dim()) {
    throw std::invalid_argument("target does not match modulus or dimension");
  }
  if (auto why = determinant_obstruction(gens, modulus, target)) {
    return {Membership::No, *why, std::nullopt};
  }
  return contains(GroupImage::enumerate(gens, modulus, cap), target);
}

Lift lift_to_integers(const GeneratorSet& gens, std::uint64_t p, const ModMatrix& target,
                      std::size_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("lifting is offered for prime moduli");
  if (target.modulus() != p || target.dim() != gens.dim()) {
    throw std::invalid_argument("target does not match modulus or dimension");
  }
  if (auto why = determinant_obstruction(gens, p, target)) throw std::domain_error(*why);
  const GroupImage image = GroupImage::enumerate(gens, p, cap);
  const auto index = image.index_of(target);
  if (!index) {
    if (!image.complete()) throw CapExceededError("element cap reached before the target was found");
    throw std::domain_error("target is not in the image mod " + std::to_string(p));
  }
  Lift lift{eval_word(gens, image.witness(*index)), image.witness(*index)};
  if (!(reduce_mod(lift.matrix, p) == target)) {
    throw std::logic_error("lift verification failed");
  }
  return lift;
}

std::string to_string(Surjectivity s) {
  switch (s) {
    case Surjectivity::Yes: return "yes";
    case Surjectivity::No: return "no";
    case Surjectivity::Capped: return "capped";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Capped: return "capped";
  }
  return "?";
}

}  // namespace thinlab
