#include "massey/nilgroup.hpp"

#include <atomic>

#include "massey/error.hpp"

namespace massey {
namespace {

std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

std::string_view to_string(Flavor flavor) noexcept {
  return flavor == Flavor::Free ? "free" : "surface";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "free") return Flavor::Free;
  if (text == "surface") return Flavor::Surface;
  throw Error(ErrorCode::PreconditionFailed,
              "flavor must be 'free' or 'surface', got '" + std::string(text) +
                  "'");
}

const ModVector& GroupElement::layer(int degree) const {
  switch (degree) {
    case 1: return v1_;
    case 2: return v2_;
    case 3: return v3_;
    default: throw Error(ErrorCode::DimensionMismatch, "layer degree");
  }
}

bool GroupElement::is_identity() const noexcept {
  for (const ModVector* part : {&v1_, &v2_, &v3_})
    for (Residue x : *part)
      if (x != 0) return false;
  return true;
}

NilGroupContext::NilGroupContext(const PrimeField& field, std::size_t rank,
                                 int genus, Flavor flavor)
    : id_(next_context_id()),
      lie_(field, rank),
      genus_(genus),
      flavor_(flavor),
      half_(field.inv(2)),
      twelfth_(field.inv(12)) {}

std::shared_ptr<const NilGroupContext> NilGroupContext::build(
    std::int64_t prime, int genus, Flavor flavor) {
  const PrimeField field(prime);
  if (genus < 1 || genus > 64)
    throw Error(ErrorCode::BadGenus,
                "genus must be in 1..64, got " + std::to_string(genus));
  if (flavor == Flavor::Surface && genus < 2)
    throw Error(ErrorCode::BadGenus, "surface flavor needs genus >= 2");
  std::shared_ptr<NilGroupContext> ctx(new NilGroupContext(
      field, 2 * static_cast<std::size_t>(genus), genus, flavor));
  if (flavor == Flavor::Surface) ctx->build_relation_ideal();
  ctx->build_atoms();
  return ctx;
}

std::shared_ptr<const NilGroupContext> NilGroupContext::build_free(
    std::int64_t prime, std::size_t rank) {
  const PrimeField field(prime);
  if (rank < 2 || rank > 128)
    throw Error(ErrorCode::BadGenus,
                "free rank must be in 2..128, got " + std::to_string(rank));
  const int genus = rank % 2 == 0 ? static_cast<int>(rank / 2) : 0;
  std::shared_ptr<NilGroupContext> ctx(
      new NilGroupContext(field, rank, genus, Flavor::Free));
  ctx->build_atoms();
  return ctx;
}

LieVector NilGroupContext::bch(const LieVector& a, const LieVector& b) const {
  const LieVector ab = lie_.bracket(a, b);
  LieVector z = lie_.add(a, b);
  z = lie_.axpy(z, half_, ab);
  z = lie_.axpy(z, twelfth_, lie_.bracket(a, ab));
  z = lie_.axpy(z, field().neg(twelfth_), lie_.bracket(b, ab));
  return z;
}

void NilGroupContext::build_relation_ideal() {
  // log of the relation word, computed in the free ring
  const PrimeField& f = field();
  auto neg = [&](const LieVector& v) { return lie_.scale(v, f.neg(1)); };
  LieVector rel = lie_.zero();
  for (int i = 0; i < genus_; ++i) {
    const LieVector x = lie_.generator(2 * i), y = lie_.generator(2 * i + 1);
    const LieVector c = bch(bch(bch(x, y), neg(x)), neg(y));
    rel = bch(rel, c);
  }
  relation_log_ = rel;

  // ideal generated by rel: close its span under ad(e_j)
  ModMatrix rows(f, 0, lie_.basis().total_dimension());
  std::vector<LieVector> frontier{rel};
  while (!frontier.empty()) {
    std::vector<LieVector> next;
    for (const LieVector& s : frontier) {
      if (s.is_zero()) continue;
      rows.append_row(s.flatten());
      for (std::size_t j = 0; j < rank(); ++j)
        next.push_back(lie_.bracket(s, lie_.generator(j)));
    }
    frontier = std::move(next);
  }
  ideal_ = row_reduce(std::move(rows));
}

void NilGroupContext::build_atoms() {
  const HallBasis& basis = lie_.basis();
  std::vector<bool> pivot(basis.total_dimension(), false);
  if (ideal_)
    for (std::size_t c : ideal_->pivot_columns) pivot[c] = true;
  for (int d = 1; d <= 3; ++d) {
    auto& kept = quotient_atoms_[d - 1];
    for (std::size_t p = 0; p < basis.dimension(d); ++p)
      if (!pivot[basis.offset(d) + p]) kept.push_back(p);
  }
  for (std::size_t q = 0; q < quotient_atoms_[0].size(); ++q)
    atom_elements_[0].push_back(generator(quotient_atoms_[0][q]));
  for (std::size_t q = 0; q < quotient_atoms_[1].size(); ++q) {
    const auto& idx = basis.atom(2, quotient_atoms_[1][q]).index;
    atom_elements_[1].push_back(
        commutator(generator(idx[0]), generator(idx[1])));
  }
  for (std::size_t q = 0; q < quotient_atoms_[2].size(); ++q) {
    const auto& idx = basis.atom(3, quotient_atoms_[2][q]).index;
    atom_elements_[2].push_back(commutator(
        commutator(generator(idx[0]), generator(idx[1])), generator(idx[2])));
  }
}

std::array<std::size_t, 3> NilGroupContext::dims() const noexcept {
  return {quotient_atoms_[0].size(), quotient_atoms_[1].size(),
          quotient_atoms_[2].size()};
}

std::size_t NilGroupContext::order_exponent() const noexcept {
  const auto d = dims();
  return d[0] + d[1] + d[2];
}

const std::vector<std::size_t>& NilGroupContext::quotient_atoms(
    int degree) const {
  if (degree < 1 || degree > 3)
    throw Error(ErrorCode::DimensionMismatch, "degree must be 1..3");
  return quotient_atoms_[degree - 1];
}

GroupWord NilGroupContext::relation_word() const {
  GroupWord w;
  for (int i = 1; i <= genus_; ++i) {
    GroupWord x{{WordTerm{WordAtom::gen({GeneratorSymbol::Kind::X, i}), 1}}};
    GroupWord y{{WordTerm{WordAtom::gen({GeneratorSymbol::Kind::Y, i}), 1}}};
    w.terms.push_back({WordAtom::bracket(std::move(x), std::move(y)), 1});
  }
  return w;
}

void NilGroupContext::check(const GroupElement& a) const {
  if (a.context_id() != id_)
    throw Error(ErrorCode::ContextMismatch,
                "element belongs to another group context");
}

GroupElement NilGroupContext::element(ModVector v1, ModVector v2,
                                      ModVector v3) const {
  const auto d = dims();
  if (v1.size() != d[0] || v2.size() != d[1] || v3.size() != d[2])
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector lengths");
  for (ModVector* part : {&v1, &v2, &v3})
    for (Residue& x : *part) x %= field().modulus();
  return GroupElement(id_, std::move(v1), std::move(v2), std::move(v3));
}

GroupElement NilGroupContext::identity() const {
  const auto d = dims();
  return GroupElement(id_, ModVector(d[0], 0), ModVector(d[1], 0),
                      ModVector(d[2], 0));
}

GroupElement NilGroupContext::generator(std::size_t position) const {
  if (position >= rank())
    throw Error(ErrorCode::UnknownGenerator,
                GeneratorSymbol::from_position(position).name() +
                    " is not a generator of this group");
  return from_lie(lie_.generator(position));
}

GroupElement NilGroupContext::generator(const GeneratorSymbol& symbol) const {
  return generator(symbol.position());
}

GroupElement NilGroupContext::from_lie(const LieVector& x) const {
  const HallBasis& basis = lie_.basis();
  ModVector flat = x.flatten();
  if (ideal_) flat = ideal_->reduce(flat);
  std::array<ModVector, 3> parts;
  for (int d = 1; d <= 3; ++d)
    for (std::size_t p : quotient_atoms_[d - 1])
      parts[d - 1].push_back(flat[basis.offset(d) + p]);
  return GroupElement(id_, std::move(parts[0]), std::move(parts[1]),
                      std::move(parts[2]));
}

LieVector NilGroupContext::to_lie(const GroupElement& a) const {
  check(a);
  LieVector x = lie_.zero();
  for (std::size_t q = 0; q < quotient_atoms_[0].size(); ++q)
    x.d1[quotient_atoms_[0][q]] = a.v1()[q];
  for (std::size_t q = 0; q < quotient_atoms_[1].size(); ++q)
    x.d2[quotient_atoms_[1][q]] = a.v2()[q];
  for (std::size_t q = 0; q < quotient_atoms_[2].size(); ++q)
    x.d3[quotient_atoms_[2][q]] = a.v3()[q];
  return x;
}

GroupElement NilGroupContext::multiply(const GroupElement& a,
                                       const GroupElement& b) const {
  return from_lie(bch(to_lie(a), to_lie(b)));
}

GroupElement NilGroupContext::inverse(const GroupElement& a) const {
  return power(a, -1);
}

GroupElement NilGroupContext::power(const GroupElement& a,
                                    std::int64_t k) const {
  check(a);
  const PrimeField& f = field();
  const Residue c = f.reduce(k);
  GroupElement out = a;
  for (ModVector* part : {&out.v1_, &out.v2_, &out.v3_})
    for (Residue& x : *part) x = f.mul(x, c);
  return out;
}

GroupElement NilGroupContext::commutator(const GroupElement& a,
                                         const GroupElement& b) const {
  return multiply(multiply(multiply(a, b), inverse(a)), inverse(b));
}

bool NilGroupContext::lcs_member(const GroupElement& a, int i) const {
  check(a);
  if (i < 1 || i > 4)
    throw Error(ErrorCode::PreconditionFailed, "series index must be 1..4");
  for (int d = 1; d < i; ++d)
    for (Residue x : a.layer(d))
      if (x != 0) return false;
  return true;
}

const GroupElement& NilGroupContext::atom_element(
    int degree, std::size_t quotient_position) const {
  if (degree < 1 || degree > 3)
    throw Error(ErrorCode::DimensionMismatch, "degree must be 1..3");
  return atom_elements_[degree - 1].at(quotient_position);
}

std::vector<NormalFormFactor> NilGroupContext::normal_form(
    const GroupElement& a) const {
  check(a);
  const HallBasis& basis = lie_.basis();
  std::vector<NormalFormFactor> out;
  GroupElement rest = a;
  for (int d = 1; d <= 3; ++d) {
    GroupElement collected = identity();
    const ModVector exps = rest.layer(d);
    for (std::size_t q = 0; q < exps.size(); ++q) {
      if (exps[q] == 0) continue;
      out.push_back({basis.atom(d, quotient_atoms_[d - 1][q]), q, exps[q]});
      collected =
          multiply(collected, power(atom_element(d, q), exps[q]));
    }
    rest = multiply(inverse(collected), rest);
  }
  return out;
}

GroupElement NilGroupContext::from_normal_form(
    const std::vector<NormalFormFactor>& factors) const {
  GroupElement out = identity();
  for (const auto& f : factors)
    out = multiply(out, power(atom_element(f.atom.degree, f.quotient_position),
                              f.exponent));
  return out;
}

GroupWord NilGroupContext::to_word(const GroupElement& a) const {
  auto gen_word = [](std::size_t pos) {
    return GroupWord{
        {WordTerm{WordAtom::gen(GeneratorSymbol::from_position(pos)), 1}}};
  };
  GroupWord w;
  for (const auto& f : normal_form(a)) {
    WordAtom atom;
    const auto& idx = f.atom.index;
    if (f.atom.degree == 1) {
      atom = WordAtom::gen(GeneratorSymbol::from_position(idx[0]));
    } else {
      WordAtom inner = WordAtom::bracket(gen_word(idx[0]), gen_word(idx[1]));
      if (f.atom.degree == 2) {
        atom = std::move(inner);
      } else {
        atom = WordAtom::bracket(GroupWord{{WordTerm{std::move(inner), 1}}},
                                 gen_word(idx[2]));
      }
    }
    w.terms.push_back({std::move(atom), field().centered(f.exponent)});
  }
  return w;
}

GroupElement NilGroupContext::evaluate(const GroupWord& word) const {
  GroupElement out = identity();
  for (const WordTerm& t : word.terms) {
    GroupElement base = identity();
    switch (t.atom.kind) {
      case WordAtom::Kind::Generator: {
        const GeneratorSymbol& g = t.atom.generator;
        if (g.position() >= rank())
          throw Error(ErrorCode::UnknownGenerator,
                      g.name() + " is not a generator of this group");
        base = generator(g.position());
        break;
      }
      case WordAtom::Kind::Bracket:
        base = commutator(evaluate(t.atom.children.at(0)),
                          evaluate(t.atom.children.at(1)));
        break;
      case WordAtom::Kind::Group:
        base = evaluate(t.atom.children.at(0));
        break;
    }
    out = multiply(out, power(base, t.exponent));
  }
  return out;
}

GroupElement NilGroupContext::evaluate(std::string_view text) const {
  return evaluate(parse_word(text));
}

}  // namespace massey
