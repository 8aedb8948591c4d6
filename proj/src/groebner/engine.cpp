#include "engine.hpp"

#include <algorithm>

namespace gspline::detail {

Engine::Engine(Ring ring, MonomialOrder order, std::vector<int> shifts)
    : ring_(std::move(ring)), order_(order), shifts_(std::move(shifts)) {
  order_.components = shifts_.size();
}

void Engine::sort(MPoly &f) const {
  std::sort(f.begin(), f.end(),
            [this](const MTerm &a, const MTerm &b) { return cmp(a, b) > 0; });
}

MPoly Engine::from_vector(const VectorElement &v, std::size_t offset) const {
  MPoly f;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (const auto &t : v[c].terms())
      f.push_back({t.monomial, static_cast<std::uint32_t>(c + offset), t.coeff});
  sort(f);
  return f;
}

VectorElement Engine::to_vector(const MPoly &f, std::size_t offset,
                                const std::vector<int> &shifts) const {
  std::vector<std::vector<Term>> comps(shifts.size());
  for (const auto &t : f) {
    if (t.comp < offset || t.comp - offset >= shifts.size())
      throw Error("internal: term outside the requested component range");
    comps[t.comp - offset].push_back({t.mono, t.coeff});
  }
  VectorElement v(ring_, shifts);
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!comps[c].empty())
      v.set(c, Polynomial(ring_, std::move(comps[c])));
  return v;
}

MPoly Engine::sub_mul(const MPoly &f, const MPoly &g, const Monomial &m,
                      const mpq_class &c) const {
  MPoly r;
  r.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  MTerm scaled;
  auto load = [&](std::size_t k) {
    scaled.mono = g[k].mono * m;
    scaled.comp = g[k].comp;
    scaled.coeff = -(g[k].coeff * c);
    ring_->normalize(scaled.coeff);
  };
  if (!g.empty())
    load(0);
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(f[i++]);
      continue;
    }
    if (i == f.size()) {
      r.push_back(scaled);
      if (++j < g.size())
        load(j);
      continue;
    }
    auto o = cmp(f[i], scaled);
    if (o > 0) {
      r.push_back(f[i++]);
    } else if (o < 0) {
      r.push_back(scaled);
      if (++j < g.size())
        load(j);
    } else {
      mpq_class s = f[i].coeff + scaled.coeff;
      ring_->normalize(s);
      if (sgn(s) != 0)
        r.push_back({f[i].mono, f[i].comp, s});
      ++i;
      if (++j < g.size())
        load(j);
    }
  }
  return r;
}

void Engine::make_monic(MPoly &f) const {
  if (f.empty() || f.front().coeff == 1)
    return;
  mpq_class inv = ring_->inverse(f.front().coeff);
  for (auto &t : f) {
    t.coeff *= inv;
    ring_->normalize(t.coeff);
  }
}

std::optional<std::size_t>
Engine::find_divisor(const MTerm &t, const std::vector<MPoly> &basis,
                     std::size_t skip) const {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip || basis[k].empty())
      continue;
    const MTerm &lead = basis[k].front();
    if (lead.comp == t.comp && lead.mono.divides(t.mono))
      return k;
  }
  return std::nullopt;
}

MPoly Engine::reduce_except(MPoly f, const std::vector<MPoly> &basis,
                            std::size_t skip) const {
  MPoly done;
  // f holds the unprocessed tail; processed terms move into done.
  std::size_t head = 0;
  while (head < f.size()) {
    const MTerm &t = f[head];
    auto k = find_divisor(t, basis, skip);
    if (!k) {
      done.push_back(t);
      ++head;
      continue;
    }
    const MPoly &g = basis[*k];
    Monomial m = t.mono / g.front().mono;
    mpq_class c = t.coeff * ring_->inverse(g.front().coeff);
    ring_->normalize(c);
    MPoly rest(f.begin() + static_cast<std::ptrdiff_t>(head), f.end());
    f = sub_mul(rest, g, m, c);
    head = 0;
  }
  return done;
}

MPoly Engine::reduce(MPoly f, const std::vector<MPoly> &basis) const {
  return reduce_except(std::move(f), basis, static_cast<std::size_t>(-1));
}

// ----------------------------------------------------------------- Builder

bool Builder::add(MPoly f) {
  f = eng_.reduce(std::move(f), basis_);
  if (f.empty())
    return false;
  eng_.make_monic(f);
  push(std::move(f));
  return true;
}

void Builder::push(MPoly f) {
  std::size_t n = basis_.size();
  const MTerm &lead = f.front();
  for (std::size_t i = 0; i < n; ++i) {
    const MTerm &other = basis_[i].front();
    if (other.comp != lead.comp)
      continue;
    // Product criterion holds for ideals only.
    if (eng_.rank() == 1 && other.mono.coprime(lead.mono))
      continue;
    Pair p{i, n, 0, {other.mono.lcm(lead.mono), lead.comp, 0}};
    p.degree = eng_.degree(p.lcm);
    pairs_.push_back(std::move(p));
    pending_.insert({i, n});
  }
  basis_.push_back(std::move(f));
}

bool Builder::chain_criterion(const Pair &p) const {
  auto pending = [this](std::size_t a, std::size_t b) {
    return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k == p.i || k == p.j)
      continue;
    const MTerm &lead = basis_[k].front();
    if (lead.comp != p.lcm.comp || !lead.mono.divides(p.lcm.mono))
      continue;
    if (!pending(p.i, k) && !pending(p.j, k))
      return true;
  }
  return false;
}

MPoly Builder::spoly(const Pair &p) const {
  const MPoly &f = basis_[p.i];
  const MPoly &g = basis_[p.j];
  Monomial mf = p.lcm.mono / f.front().mono;
  Monomial mg = p.lcm.mono / g.front().mono;
  mpq_class cf = eng_.ring()->inverse(f.front().coeff);
  mpq_class cg = eng_.ring()->inverse(g.front().coeff);
  // cf*mf*f - cg*mg*g
  MPoly scaled_f = eng_.sub_mul(MPoly{}, f, mf, -cf);
  return eng_.sub_mul(scaled_f, g, mg, cg);
}

void Builder::complete(std::optional<long> max_degree) {
  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair &a = pairs_[k], &b = pairs_[best];
      if (a.degree < b.degree ||
          (a.degree == b.degree && eng_.cmp(a.lcm, b.lcm) < 0))
        best = k;
    }
    if (max_degree && pairs_[best].degree > *max_degree)
      return;
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    if (chain_criterion(p)) {
      pending_.erase({p.i, p.j});
      continue;
    }
    pending_.erase({p.i, p.j});
    MPoly s = eng_.reduce(spoly(p), basis_);
    if (!s.empty()) {
      eng_.make_monic(s);
      push(std::move(s));
    }
  }
}

std::vector<MPoly> Builder::reduced_basis() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const MTerm &li = basis_[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (j == i)
        continue;
      const MTerm &lj = basis_[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono))
        continue;
      redundant = !(lj.mono == li.mono) || j < i;
    }
    if (!redundant)
      keep.push_back(i);
  }
  std::vector<MPoly> minimal;
  minimal.reserve(keep.size());
  for (auto i : keep)
    minimal.push_back(basis_[i]);
  std::vector<MPoly> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    MPoly f = eng_.reduce_except(minimal[i], minimal, i);
    eng_.make_monic(f);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [this](const MPoly &a, const MPoly &b) {
    return eng_.cmp(a.front(), b.front()) < 0;
  });
  return out;
}

} // namespace gspline::detail
