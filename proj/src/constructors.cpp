#include "amalgam/constructors.hpp"

#include <cctype>
#include <limits>

#include "amalgam/expr.hpp"

namespace amalgam {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      throw BudgetExceeded(what + " exceeds the ring size cap " + std::to_string(cap));
    r *= base;
  }
  if (r > cap) throw BudgetExceeded(what + " exceeds the ring size cap " + std::to_string(cap));
  return r;
}

bool plain_token(const std::string& s) {
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

// "2x^2+x+1" style name; coefficients that are not plain tokens are braced.
std::string poly_name(const Ring& base, const std::vector<Elem>& c, const std::vector<std::string>& monomials) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == base.zero()) continue;
    if (!out.empty()) out += "+";
    std::string coeff = base.name(c[k]);
    if (!plain_token(coeff)) coeff = "{" + coeff + "}";
    if (monomials[k].empty()) {
      out += coeff;
    } else {
      if (c[k] != base.one()) out += coeff;
      out += monomials[k];
    }
  }
  return out.empty() ? base.name(base.zero()) : out;
}

void decode(std::size_t index, std::size_t q, std::vector<Elem>& digits) {
  for (auto& d : digits) {
    d = static_cast<Elem>(index % q);
    index /= q;
  }
}

std::size_t encode(const std::vector<Elem>& digits, std::size_t q) {
  std::size_t r = 0;
  for (std::size_t k = digits.size(); k-- > 0;) r = r * q + digits[k];
  return r;
}

}  // namespace

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring mk_zmod(long n, const Budget& budget) {
  if (n < 1) throw InvalidArgument("zmod: n must be >= 1, got " + std::to_string(n));
  const auto size = static_cast<std::size_t>(n);
  if (size > budget.ring_size)
    throw BudgetExceeded("zmod " + std::to_string(n) + " exceeds the ring size cap " +
                         std::to_string(budget.ring_size));
  RingTables t;
  t.size = size;
  t.add.resize(size * size);
  t.mul.resize(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      t.add[a * size + b] = static_cast<Elem>((a + b) % size);
      t.mul[a * size + b] = static_cast<Elem>((a * b) % size);
    }
  t.zero = 0;
  t.one = static_cast<Elem>(1 % size);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
  return make_ring(std::move(t), std::move(names), expr::zmod(n), Ring::Kind::ZMod, {}, {n}, budget);
}

Ring mk_poly_quot(const Ring& base, const PolyOverRing& modulus, const Budget& budget) {
  if (!(modulus.ring() == base)) throw InvalidArgument("polyquot: modulus is over a different ring");
  if (modulus.degree() < 1) throw InvalidArgument("polyquot: modulus must have degree >= 1");
  if (!modulus.monic()) throw InvalidArgument("polyquot: modulus must be monic");
  const std::size_t d = static_cast<std::size_t>(modulus.degree());
  const std::size_t q = base.size();
  const std::string prov = expr::polyquot(base, modulus);
  const std::size_t n = checked_power(q, d, budget.ring_size, prov);

  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(d));
  for (std::size_t i = 0; i < n; ++i) decode(i, q, digits[i]);

  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Elem> sum(d), prod(2 * d - 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < d; ++k) sum[k] = base.add(digits[a][k], digits[b][k]);
      t.add[a * n + b] = static_cast<Elem>(encode(sum, q));

      std::fill(prod.begin(), prod.end(), base.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = base.add(prod[i + j], base.mul(digits[a][i], digits[b][j]));
      for (std::size_t k = 2 * d - 1; k-- > d;) {
        const Elem c = prod[k];
        if (c == base.zero()) continue;
        for (std::size_t i = 0; i <= d; ++i)
          prod[k - d + i] = base.sub(prod[k - d + i], base.mul(c, modulus.coeff(i)));
      }
      std::vector<Elem> low(prod.begin(), prod.begin() + static_cast<long>(d));
      t.mul[a * n + b] = static_cast<Elem>(encode(low, q));
    }
  }
  std::vector<Elem> zero_digits(d, base.zero()), one_digits(d, base.zero());
  one_digits[0] = base.one();
  t.zero = static_cast<Elem>(encode(zero_digits, q));
  t.one = static_cast<Elem>(encode(one_digits, q));

  std::vector<std::string> monomials(d);
  for (std::size_t k = 1; k < d; ++k) monomials[k] = k == 1 ? "x" : "x^" + std::to_string(k);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(poly_name(base, digits[i], monomials));
  return make_ring(std::move(t), std::move(names), prov, Ring::Kind::PolyQuot, {base},
                   {static_cast<long>(d)}, budget);
}

Ring mk_truncated_poly(long p, long k, long d, const Budget& budget) {
  const std::string prov = expr::truncpoly(p, k, d);
  if (!is_prime_number(p)) throw InvalidArgument("truncpoly: p must be prime, got " + std::to_string(p));
  if (k < 1) throw InvalidArgument("truncpoly: k must be >= 1");
  if (d < 1) throw InvalidArgument("truncpoly: d must be >= 1");

  // Exponent vectors of total degree < d, graded, then lex with x1 largest.
  std::vector<std::vector<int>> monos;
  for (long deg = 0; deg < d; ++deg) {
    std::vector<std::vector<int>> level;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, std::size_t var, long left) -> void {
      if (var + 1 == e.size()) {
        e[var] = static_cast<int>(left);
        level.push_back(e);
        return;
      }
      for (long take = left; take >= 0; --take) {
        e[var] = static_cast<int>(take);
        self(self, var + 1, left - take);
      }
    };
    rec(rec, 0, deg);
    monos.insert(monos.end(), level.begin(), level.end());
    if (monos.size() > 64) throw BudgetExceeded(prov + " exceeds the ring size cap");
  }
  const std::size_t m = monos.size();
  const auto q = static_cast<std::size_t>(p);
  const std::size_t n = checked_power(q, m, budget.ring_size, prov);

  auto degree_of = [](const std::vector<int>& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::vector<int> mono_product(m * m, -1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> e(static_cast<std::size_t>(k));
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = monos[i][v] + monos[j][v];
      if (degree_of(e) >= d) continue;
      for (std::size_t t = 0; t < m; ++t)
        if (monos[t] == e) mono_product[i * m + j] = static_cast<int>(t);
    }

  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(m));
  for (std::size_t i = 0; i < n; ++i) decode(i, q, digits[i]);
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Elem> acc(m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t s = 0; s < m; ++s) acc[s] = static_cast<Elem>((digits[a][s] + digits[b][s]) % q);
      t.add[a * n + b] = static_cast<Elem>(encode(acc, q));
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (!digits[a][i]) continue;
        for (std::size_t j = 0; j < m; ++j) {
          const int target = mono_product[i * m + j];
          if (target < 0 || !digits[b][j]) continue;
          acc[target] = static_cast<Elem>((acc[target] + digits[a][i] * digits[b][j]) % q);
        }
      }
      t.mul[a * n + b] = static_cast<Elem>(encode(acc, q));
    }
  t.zero = 0;
  t.one = 1;

  std::vector<std::string> vars;
  for (long v = 0; v < k; ++v)
    vars.push_back(k <= 3 ? std::string(1, "xyz"[v]) : "x" + std::to_string(v + 1));
  std::vector<std::string> mono_names(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (monos[i][v] == 0) continue;
      mono_names[i] += vars[v];
      if (monos[i][v] > 1) mono_names[i] += "^" + std::to_string(monos[i][v]);
    }
  const Ring coeffs = mk_zmod(p, budget);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(poly_name(coeffs, digits[i], mono_names));
  return make_ring(std::move(t), std::move(names), prov, Ring::Kind::TruncPoly, {}, {p, k, d}, budget);
}

ProductRing mk_product(const Ring& left, const Ring& right, const Budget& budget) {
  const std::size_t n1 = left.size(), n2 = right.size();
  const std::string prov = expr::product(left, right);
  checked_power(n1 * n2, 1, budget.ring_size, prov);
  const std::size_t n = n1 * n2;
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto a1 = static_cast<Elem>(a / n2), a2 = static_cast<Elem>(a % n2);
      const auto b1 = static_cast<Elem>(b / n2), b2 = static_cast<Elem>(b % n2);
      t.add[a * n + b] = static_cast<Elem>(left.add(a1, b1) * n2 + right.add(a2, b2));
      t.mul[a * n + b] = static_cast<Elem>(left.mul(a1, b1) * n2 + right.mul(a2, b2));
    }
  t.zero = static_cast<Elem>(left.zero() * n2 + right.zero());
  t.one = static_cast<Elem>(left.one() * n2 + right.one());
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    names.push_back("[" + left.name(static_cast<Elem>(a / n2)) + "," + right.name(static_cast<Elem>(a % n2)) + "]");
  Ring r = make_ring(std::move(t), std::move(names), prov, Ring::Kind::Product, {left, right}, {}, budget);
  std::vector<Elem> p1(n), p2(n);
  for (std::size_t a = 0; a < n; ++a) {
    p1[a] = static_cast<Elem>(a / n2);
    p2[a] = static_cast<Elem>(a % n2);
  }
  ProductRing out{r, mk_hom(r, left, std::move(p1)), mk_hom(r, right, std::move(p2)), n2};
  return out;
}

QuotientRing mk_quotient(const Ring& r, const Ideal& i, const Budget& budget) {
  if (!(i.ring() == r)) throw InvalidArgument("quot: ideal belongs to a different ring");
  if (!is_ideal(r, i.members())) throw InvalidArgument("quot: not an ideal of " + r.provenance());
  const std::size_t n = r.size();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  const auto members = i.members().elements();
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem m : members) coset[r.add(x, m)] = id;
  }
  const std::size_t q = reps.size();
  RingTables t;
  t.size = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      t.add[a * q + b] = static_cast<Elem>(coset[r.add(reps[a], reps[b])]);
      t.mul[a * q + b] = static_cast<Elem>(coset[r.mul(reps[a], reps[b])]);
    }
  t.zero = static_cast<Elem>(coset[r.zero()]);
  t.one = static_cast<Elem>(coset[r.one()]);
  std::vector<std::string> names;
  for (Elem rep : reps) names.push_back(r.name(rep));
  std::vector<long> proj_param(coset.begin(), coset.end());
  Ring qr = make_ring(std::move(t), std::move(names), expr::quot(r, i), Ring::Kind::Quotient, {r},
                      std::move(proj_param), budget);
  std::vector<Elem> proj(n);
  for (Elem x = 0; x < n; ++x) proj[x] = static_cast<Elem>(coset[x]);
  QuotientRing out{qr, mk_hom(r, qr, std::move(proj))};
  enforce(kernel(out.projection) == i, "quotient projection kernel differs from the ideal");
  return out;
}

Elem Subring::local(Elem ambient) const {
  const int v = from_ambient.at(ambient);
  if (v < 0) throw InvalidArgument("element " + inclusion.target().name(ambient) + " is outside the subring");
  return static_cast<Elem>(v);
}

Subring mk_subring(const Ring& ambient, const Subset& members, std::string provenance, Ring::Kind kind,
                   std::vector<Ring> operands, const Budget& budget) {
  if (!members.contains(ambient.zero()) || !members.contains(ambient.one()))
    throw InvalidArgument("subring must contain 0 and 1: " + provenance);
  const auto elems = members.elements();
  std::vector<int> local(ambient.size(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<int>(k);
  const std::size_t n = elems.size();
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int s = local[ambient.add(elems[a], elems[b])];
      const int p = local[ambient.mul(elems[a], elems[b])];
      if (s < 0 || p < 0)
        throw InvalidArgument("subset not closed under ring operations at (" + ambient.name(elems[a]) + ", " +
                              ambient.name(elems[b]) + "): " + provenance);
      t.add[a * n + b] = static_cast<Elem>(s);
      t.mul[a * n + b] = static_cast<Elem>(p);
    }
  t.zero = static_cast<Elem>(local[ambient.zero()]);
  t.one = static_cast<Elem>(local[ambient.one()]);
  std::vector<std::string> names;
  for (Elem e : elems) names.push_back(ambient.name(e));
  Ring r = make_ring(std::move(t), std::move(names), std::move(provenance), kind, std::move(operands), {}, budget);
  return Subring{r, mk_hom(r, ambient, elems), std::move(local)};
}

Subring image_subring(const RingHom& h, const Budget& budget) {
  return mk_subring(h.target(), h.image_set(), "(image " + expr::hom(h) + ")", Ring::Kind::Subring,
                    {h.target()}, budget);
}

Subset subring_closure(const Ring& r, const std::vector<Elem>& gens) {
  Subset s(r.size());
  std::vector<Elem> list;
  auto push = [&](Elem e) {
    if (!s.contains(e)) {
      s.insert(e);
      list.push_back(e);
    }
  };
  push(r.zero());
  push(r.one());
  for (Elem g : gens) push(g);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(r.add(list[i], list[j]));
      push(r.mul(list[i], list[j]));
    }
  return s;
}

}  // namespace amalgam
