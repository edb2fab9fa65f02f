#include "quadnorm/class_group.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace quadnorm {

namespace {

// tau on a quotient, computed through lifts.
AbHom descend(const AbHom& tau, const Quotient& q) {
  const FinAbGroup& g = q.group();
  std::vector<Element> cols;
  for (std::size_t j = 0; j < g.ngens(); ++j) cols.push_back(q.project(tau(q.lift(g.basis_vector(j)))));
  return AbHom(g, g, IntMatrix::from_columns(g.ngens(), cols));
}

}  // namespace

ClassGroup::ClassGroup(const QuadField& k) : field_(k), tau_(AbHom::identity(FinAbGroup())) {
  const Int& D = k.discriminant();
  reduced_ = reduced_forms(D);
  if (D < 0) {
    reps_ = reduced_;
    for (std::size_t i = 0; i < reps_.size(); ++i) index_[{reps_[i].a, reps_[i].b}] = i;
  } else {
    for (const QuadForm& f : reduced_) {
      if (index_.count({f.a, f.b})) continue;
      std::vector<QuadForm> cycle{f};
      for (QuadForm g = rho(f).form; !(g == f); g = rho(g).form) {
        cycle.push_back(g);
        if (cycle.size() > reduced_.size()) throw std::logic_error("class group: rho cycle does not close");
      }
      const QuadForm rep = *std::min_element(cycle.begin(), cycle.end(), [](const QuadForm& x, const QuadForm& y) {
        return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
      });
      for (const QuadForm& g : cycle) index_[{g.a, g.b}] = reps_.size();
      reps_.push_back(rep);
    }
  }

  // Build the group one generator at a time: H_k = <g_1, ..., g_k>, and each
  // element of H_k has a unique normal form sum i_j e_j with 0 <= i_j < n_j.
  const std::size_t n = reps_.size();
  const std::size_t id = index_of(principal_form(D));
  std::vector<std::optional<Element>> coord(n);
  coord[id] = Element{};
  std::vector<std::size_t> members{id};
  std::vector<Element> relations;
  std::size_t ngens = 0;
  auto padded = [&](Element v, std::size_t len) {
    v.resize(len, 0);
    return v;
  };
  for (std::size_t g = 0; g < n; ++g) {
    if (coord[g]) continue;
    const std::size_t kk = ngens++;
    std::size_t x = g;
    long m = 1;
    while (!coord[x]) {
      x = multiply(x, g);
      ++m;
    }
    Element rel = padded(*coord[x], ngens);
    for (Int& r : rel) r = -r;
    rel[kk] += m;
    relations.push_back(rel);
    const std::vector<std::size_t> base = members;
    std::size_t gpow = g;
    for (long i = 1; i < m; ++i) {
      for (std::size_t h : base) {
        const std::size_t e = multiply(h, gpow);
        Element c = padded(*coord[h], ngens);
        c[kk] = i;
        coord[e] = c;
        members.push_back(e);
      }
      gpow = multiply(gpow, g);
    }
  }
  if (members.size() != n) throw std::logic_error("class group: enumeration missed classes");
  IntMatrix rel(relations.size(), ngens);
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t j = 0; j < ngens; ++j) rel(i, j) = j < relations[i].size() ? relations[i][j] : Int(0);
  for (std::size_t i = 0; i < n; ++i) coords_.push_back(padded(*coord[i], ngens));
  narrow_ = present(rel, ngens);
  narrow_group_ = narrow_.group;

  // tau on the narrow group: column i of the enumeration basis is the class of
  // the conjugate of the i-th enumeration generator.
  std::vector<Element> tau_cols;
  {
    std::vector<std::size_t> gen_index(ngens);
    for (std::size_t i = 0; i < n; ++i) {
      const Element& c = coords_[i];
      std::size_t nz = 0, at = 0;
      for (std::size_t j = 0; j < ngens; ++j)
        if (c[j] != 0) ++nz, at = j;
      if (nz == 1 && c[at] == 1) gen_index[at] = i;
    }
    std::vector<Element> images;
    for (std::size_t j = 0; j < ngens; ++j) images.push_back(narrow_class_of(reps_[gen_index[j]].conj()));
    for (std::size_t j = 0; j < narrow_group_.ngens(); ++j) {
      Element col = narrow_group_.zero();
      for (std::size_t i = 0; i < ngens; ++i)
        col = narrow_group_.add(col, narrow_group_.scale(images[i], narrow_.from_group(i, j)));
      tau_cols.push_back(col);
    }
  }
  const AbHom narrow_tau(narrow_group_, narrow_group_, IntMatrix::from_columns(narrow_group_.ngens(), tau_cols));

  negative_class_ = narrow_group_.zero();
  if (D > 0) negative_class_ = narrow_class_of(form_from(D, -1, mod_floor(D, 2)));
  const Quotient wide(narrow_group_, {negative_class_});
  group_ = wide.group();
  to_wide_ = wide.projection().matrix();
  tau_ = descend(narrow_tau, wide);
}

std::size_t ClassGroup::index_of(const QuadForm& f) const {
  if (f.discriminant() != field_.discriminant()) throw std::invalid_argument("class group: form of another discriminant");
  const QuadForm r = reduce_form(f).form;
  const auto it = index_.find({r.a, r.b});
  if (it == index_.end()) throw std::logic_error("class group: reduced form " + r.to_string() + " not enumerated");
  return it->second;
}

std::size_t ClassGroup::multiply(std::size_t i, std::size_t j) const { return index_of(compose(reps_[i], reps_[j])); }

Element ClassGroup::narrow_class_of(const QuadForm& f) const {
  if (!f.is_primitive()) throw std::invalid_argument("class group: form " + f.to_string() + " is not primitive");
  return narrow_group_.reduce(narrow_.to_group * coords_[index_of(f)]);
}

Element ClassGroup::class_of(const QuadForm& f) const { return group_.reduce(to_wide_ * narrow_class_of(f)); }

Element ClassGroup::class_of(const QuadIdeal& I) const { return class_of(I.form()); }

ClassGroup class_group(const QuadField& k) { return ClassGroup(k); }

std::vector<PrimeIdeal> sigma_primes(const QuadField& k, const SigmaSet& sigma) {
  std::vector<PrimeIdeal> out;
  for (long p : sigma.finite_primes())
    for (PrimeIdeal& P : primes_above(k, p)) out.push_back(std::move(P));
  return out;
}

SClassGroup s_class_group(const ClassGroup& cl, const SigmaSet& sigma) {
  validate_sigma(cl.field().d(), sigma);
  std::vector<PrimeIdeal> primes = sigma_primes(cl.field(), sigma);
  std::vector<Element> classes;
  for (const PrimeIdeal& P : primes) classes.push_back(cl.class_of(P.ideal));
  const Quotient q(cl.group(), classes);
  return SClassGroup{q.group(), descend(cl.tau(), q), q.projection(), std::move(primes), std::move(classes)};
}

}  // namespace quadnorm
