#include "rrh/deligne/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "rrh/precision/error.hpp"

namespace rrh::deligne {

namespace {

constexpr std::string_view kCovGlyph = "•";     // bullet
constexpr std::string_view kContraGlyph = "∘";  // ring operator
constexpr std::string_view kContraAlt = "○";    // white circle

Letter flip(Letter l) { return l == Letter::Cov ? Letter::Contra : Letter::Cov; }

std::string edges_string(const Matching& m) {
  std::string s = "[";
  for (const auto& [a, b] : m.edges()) {
    if (s.size() > 1) s += " ";
    s += std::to_string(a) + "-" + std::to_string(b);
  }
  return s + "]";
}

mpq_class inverse_factorial(std::size_t n) {
  mpz_class f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return mpq_class(1, f);
}

void enumerate(const std::vector<Letter>& letters, std::size_t split, std::vector<int>& partner,
               std::vector<std::pair<int, int>>& edges, std::vector<Matching>& out) {
  const auto first = std::find(partner.begin(), partner.end(), -1);
  if (first == partner.end()) {
    out.emplace_back(edges);
    return;
  }
  const int i = static_cast<int>(first - partner.begin());
  for (int j = i + 1; j < static_cast<int>(letters.size()); ++j) {
    if (partner[static_cast<std::size_t>(j)] != -1) continue;
    const bool same_side = (static_cast<std::size_t>(i) < split) == (static_cast<std::size_t>(j) < split);
    const bool same_letter = letters[static_cast<std::size_t>(i)] == letters[static_cast<std::size_t>(j)];
    if (same_side == same_letter) continue;
    partner[static_cast<std::size_t>(i)] = j;
    partner[static_cast<std::size_t>(j)] = i;
    edges.emplace_back(i, j);
    enumerate(letters, split, partner, edges, out);
    edges.pop_back();
    partner[static_cast<std::size_t>(i)] = -1;
    partner[static_cast<std::size_t>(j)] = -1;
  }
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    auto rest = text.substr(i);
    if (rest.starts_with(kCovGlyph)) {
      letters.push_back(Letter::Cov);
      i += kCovGlyph.size();
    } else if (rest.starts_with(kContraGlyph)) {
      letters.push_back(Letter::Contra);
      i += kContraGlyph.size();
    } else if (rest.starts_with(kContraAlt)) {
      letters.push_back(Letter::Contra);
      i += kContraAlt.size();
    } else if (rest[0] == '*') {
      letters.push_back(Letter::Cov);
      ++i;
    } else if (rest[0] == 'o') {
      letters.push_back(Letter::Contra);
      ++i;
    } else {
      throw DomainError("Word::parse: unexpected character in '" + std::string(text) + "'");
    }
  }
  return Word(std::move(letters));
}

int Word::charge() const {
  int c = 0;
  for (Letter l : letters_) c += l == Letter::Cov ? 1 : -1;
  return c;
}

std::string Word::to_string() const {
  std::string s;
  for (Letter l : letters_) s += l == Letter::Cov ? kCovGlyph : kContraGlyph;
  return s;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

Word dual(const Word& w) {
  std::vector<Letter> letters;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(flip(*it));
  return Word(std::move(letters));
}

std::vector<Word> words_of_length(int n) {
  std::vector<Word> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Letter> letters;
    for (int i = n - 1; i >= 0; --i) letters.push_back((mask >> i) & 1u ? Letter::Contra : Letter::Cov);
    out.emplace_back(std::move(letters));
  }
  return out;
}

Matching::Matching(std::vector<std::pair<int, int>> edges) : edges_(std::move(edges)) {
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Matching::partners() const {
  std::vector<int> p(edges_.size() * 2, -1);
  for (const auto& [a, b] : edges_) {
    if (static_cast<std::size_t>(b) >= p.size() || a < 0) throw DomainError("Matching: position out of range");
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  }
  return p;
}

bool is_admissible(const Word& source, const Word& target, const Matching& m) {
  const std::size_t s = source.size();
  const std::size_t total = s + target.size();
  if (m.edges().size() * 2 != total) return false;
  std::vector<bool> seen(total, false);
  auto letter = [&](std::size_t pos) { return pos < s ? source[pos] : target[pos - s]; };
  for (const auto& [a, b] : m.edges()) {
    if (a < 0 || static_cast<std::size_t>(b) >= total || a == b) return false;
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    if (seen[ua] || seen[ub]) return false;
    seen[ua] = seen[ub] = true;
    const bool same_side = (ua < s) == (ub < s);
    const bool same_letter = letter(ua) == letter(ub);
    if (same_side == same_letter) return false;
  }
  return true;
}

std::vector<Matching> all_matchings(const Word& source, const Word& target) {
  std::vector<Letter> letters = source.letters();
  letters.insert(letters.end(), target.letters().begin(), target.letters().end());
  std::vector<Matching> out;
  if (letters.size() % 2 != 0 || source.charge() != target.charge()) return out;
  std::vector<int> partner(letters.size(), -1);
  std::vector<std::pair<int, int>> edges;
  enumerate(letters, source.size(), partner, edges, out);
  std::sort(out.begin(), out.end());
  return out;
}

DiagMorphism::DiagMorphism(Word source, Word target) : source_(std::move(source)), target_(std::move(target)) {}

DiagMorphism::DiagMorphism(Word source, Word target, Matching m, Poly coeff)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!is_admissible(source_, target_, m)) {
    throw DomainError("DiagMorphism: matching " + edges_string(m) + " is not admissible for " +
                      source_.to_string() + " -> " + target_.to_string());
  }
  add_term(m, coeff);
}

void DiagMorphism::add_term(const Matching& m, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiagMorphism::require_same_hom(const DiagMorphism& rhs) const {
  if (source_ != rhs.source_ || target_ != rhs.target_) {
    throw CompositionError("DiagMorphism: adding morphisms between different words");
  }
}

DiagMorphism& DiagMorphism::operator+=(const DiagMorphism& rhs) {
  require_same_hom(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

DiagMorphism& DiagMorphism::operator-=(const DiagMorphism& rhs) {
  require_same_hom(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

DiagMorphism& DiagMorphism::operator*=(const Poly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly DiagMorphism::scalar() const {
  const auto it = terms_.find(Matching());
  return it == terms_.end() ? Poly() : it->second;
}

std::string DiagMorphism::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.factored() + ")" + edges_string(m);
  }
  return s;
}

DiagMorphism identity(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  DiagMorphism id(w, w);
  id.add_term(Matching(std::move(edges)), Poly(1));
  return id;
}

std::pair<Matching, int> compose_matchings(const Matching& f, const Matching& g, std::size_t a, std::size_t b,
                                           std::size_t c) {
  const std::vector<int> pg = g.partners();
  const std::vector<int> pf = f.partners();
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  std::vector<bool> visited(b, false);

  // Follows edges alternately through g and f from an outer letter until
  // another outer letter is reached; returns it in A-then-C numbering.
  auto walk = [&](bool in_g, int pos) {
    while (true) {
      if (in_g) {
        const int q = pg[static_cast<std::size_t>(pos)];
        if (q < ia) return q;
        visited[static_cast<std::size_t>(q - ia)] = true;
        pos = q - ia;
        in_g = false;
      } else {
        const int q = pf[static_cast<std::size_t>(pos)];
        if (q >= ib) return ia + (q - ib);
        visited[static_cast<std::size_t>(q)] = true;
        pos = ia + q;
        in_g = true;
      }
    }
  };

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < ia; ++i) {
    const int j = walk(true, i);
    if (i < j) edges.emplace_back(i, j);
  }
  for (int j = 0; j < static_cast<int>(c); ++j) {
    const int k = walk(false, ib + j);
    if (ia + j < k) edges.emplace_back(ia + j, k);
  }

  int loops = 0;
  for (std::size_t m = 0; m < b; ++m) {
    if (visited[m]) continue;
    ++loops;
    int cur = static_cast<int>(m);
    do {
      visited[static_cast<std::size_t>(cur)] = true;
      const int across = pg[static_cast<std::size_t>(ia + cur)] - ia;
      visited[static_cast<std::size_t>(across)] = true;
      cur = pf[static_cast<std::size_t>(across)];
    } while (cur != static_cast<int>(m));
  }
  return {Matching(std::move(edges)), loops};
}

DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g) {
  if (g.target() != f.source()) {
    throw CompositionError("compose: target " + g.target().to_string() + " does not match source " +
                           f.source().to_string());
  }
  DiagMorphism out(g.source(), f.target());
  const std::size_t a = g.source().size();
  const std::size_t b = g.target().size();
  const std::size_t c = f.target().size();
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      auto [m, loops] = compose_matchings(mf, mg, a, b, c);
      out.add_term(m, cf * cg * power_of_t(loops));
    }
  }
  return out;
}

DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g) {
  const int a = static_cast<int>(f.source().size());
  const int b = static_cast<int>(f.target().size());
  const int c = static_cast<int>(g.source().size());
  auto map_f = [&](int p) { return p < a ? p : a + c + (p - a); };
  auto map_g = [&](int p) { return p < c ? a + p : a + c + b + (p - c); };
  DiagMorphism out(f.source() + g.source(), f.target() + g.target());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      std::vector<std::pair<int, int>> edges;
      for (const auto& [x, y] : mf.edges()) edges.emplace_back(map_f(x), map_f(y));
      for (const auto& [x, y] : mg.edges()) edges.emplace_back(map_g(x), map_g(y));
      out.add_term(Matching(std::move(edges)), cf * cg);
    }
  }
  return out;
}

DiagMorphism swap(const Word& u, const Word& v) {
  const int nu = static_cast<int>(u.size());
  const int nv = static_cast<int>(v.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nu; ++i) edges.emplace_back(i, nu + nv + nv + i);
  for (int j = 0; j < nv; ++j) edges.emplace_back(nu + j, nu + nv + j);
  return DiagMorphism(u + v, v + u, Matching(std::move(edges)));
}

DiagMorphism permutation(const Word& w, const std::vector<int>& perm) {
  const int n = static_cast<int>(w.size());
  if (perm.size() != w.size()) throw DomainError("permutation: size mismatch");
  std::vector<Letter> target(w.size());
  std::vector<bool> hit(w.size(), false);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const int p = perm[static_cast<std::size_t>(i)];
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) throw DomainError("permutation: not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
    target[static_cast<std::size_t>(p)] = w[static_cast<std::size_t>(i)];
    edges.emplace_back(i, n + p);
  }
  return DiagMorphism(w, Word(std::move(target)), Matching(std::move(edges)));
}

namespace {

DiagMorphism averaged(const Word& w, bool signed_sum) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != w[0]) throw DomainError("symmetrizer: word must repeat a single letter");
  }
  std::vector<int> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  const mpq_class scale = inverse_factorial(w.size());
  DiagMorphism out(w, w);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    const mpq_class sign = signed_sum && inversions % 2 ? -1 : 1;
    out += permutation(w, perm) * Poly(mpq_class(sign * scale));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

DiagMorphism symmetrizer(const Word& w) { return averaged(w, false); }

DiagMorphism antisymmetrizer(const Word& w) { return averaged(w, true); }

DiagMorphism coevaluation(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, 2 * n - 1 - i);
  return DiagMorphism(Word(), w + dual(w), Matching(std::move(edges)));
}

DiagMorphism evaluation(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, 2 * n - 1 - i);
  return DiagMorphism(w + dual(w), Word(), Matching(std::move(edges)));
}

Poly categorical_dim(const Word& w, const DiagMorphism& e, Nesting nesting) {
  if (e.source() != w || e.target() != w) throw DomainError("categorical_dim: e must be an endomorphism of the word");
  if (compose(e, e) != e) throw DomainError("categorical_dim: e is not idempotent");
  const Word wd = dual(w);
  DiagMorphism closed = nesting == Nesting::Right
                            ? compose(evaluation(w), compose(tensor(e, identity(wd)), coevaluation(w)))
                            : compose(evaluation(wd), compose(tensor(identity(wd), e), coevaluation(wd)));
  return closed.scalar();
}

APComplex vogel_dimension(const APComplex& a, const APComplex& b, const APComplex& c) {
  const APComplex denom = a * b * c;
  if (denom.is_zero()) throw DomainError("vogel_dimension: a b c must be non-zero");
  const APComplex s2 = (a + b + c) * 2;
  return (a - s2) * (b - s2) * (c - s2) / denom;
}

mpq_class vogel_dimension(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
  const mpq_class denom = a * b * c;
  if (denom == 0) throw DomainError("vogel_dimension: a b c must be non-zero");
  const mpq_class s2 = 2 * (a + b + c);
  mpq_class out = (a - s2) * (b - s2) * (c - s2) / denom;
  out.canonicalize();
  return out;
}

LawCheck check_category_laws(int max_len) {
  if (max_len < 0) throw DomainError("check_category_laws: negative length");
  LawCheck report;
  auto record = [&](bool ok, const std::string& what) {
    ++report.checked;
    if (ok) return;
    ++report.failed;
    if (report.failures.size() < 10) report.failures.push_back(what);
  };

  std::vector<Word> words;
  for (int n = 0; n <= max_len; ++n) {
    for (auto& w : words_of_length(n)) words.push_back(std::move(w));
  }
  std::map<std::pair<Word, Word>, std::vector<Matching>> homs;
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (x.charge() == y.charge()) homs[{x, y}] = all_matchings(x, y);
    }
  }
  auto identity_matching = [](std::size_t n) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(n + i));
    return Matching(std::move(edges));
  };

  for (const auto& [key, ms] : homs) {
    const auto& [x, y] = key;
    const Matching idx = identity_matching(x.size());
    const Matching idy = identity_matching(y.size());
    for (const auto& m : ms) {
      const std::string tag = x.to_string() + "->" + y.to_string() + " " + edges_string(m);
      record(compose_matchings(idy, m, x.size(), y.size(), y.size()) == std::make_pair(m, 0), "left unit " + tag);
      record(compose_matchings(m, idx, x.size(), x.size(), y.size()) == std::make_pair(m, 0), "right unit " + tag);
    }
  }

  for (const auto& a : words) {
    for (const auto& b : words) {
      if (b.charge() != a.charge()) continue;
      for (const auto& c : words) {
        if (c.charge() != a.charge()) continue;
        for (const auto& d : words) {
          if (d.charge() != a.charge()) continue;
          const auto& hs = homs.at({a, b});
          const auto& gs = homs.at({b, c});
          const auto& fs = homs.at({c, d});
          for (const auto& h : hs) {
            for (const auto& g : gs) {
              const auto gh = compose_matchings(g, h, a.size(), b.size(), c.size());
              for (const auto& f : fs) {
                const auto fg = compose_matchings(f, g, b.size(), c.size(), d.size());
                const auto left = compose_matchings(fg.first, h, a.size(), b.size(), d.size());
                const auto right = compose_matchings(f, gh.first, a.size(), c.size(), d.size());
                const bool ok =
                    left.first == right.first && left.second + fg.second == right.second + gh.second;
                record(ok, "associativity " + a.to_string() + "->" + b.to_string() + "->" + c.to_string() + "->" +
                               d.to_string());
              }
            }
          }
        }
      }
    }
  }

  const int small = std::min(max_len, 2);
  std::vector<Word> short_words;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) <= small) short_words.push_back(w);
  }
  const Word unit;
  for (const auto& u : short_words) {
    for (const auto& v : short_words) {
      record(compose(swap(v, u), swap(u, v)) == identity(u + v), "swap twice " + u.to_string() + v.to_string());
      record(tensor(identity(u), identity(v)) == identity(u + v), "tensor of identities " + u.to_string() + v.to_string());
      if (u.charge() != v.charge()) continue;
      for (const auto& m : homs.at({u, v})) {
        const DiagMorphism f(u, v, m);
        record(tensor(identity(unit), f) == f && tensor(f, identity(unit)) == f, "tensor unit " + edges_string(m));
      }
    }
  }
  // (f (x) g) o (f' (x) g') = (f o f') (x) (g o g')
  for (const auto& a0 : short_words) {
    for (const auto& a1 : short_words) {
      if (a1.charge() != a0.charge()) continue;
      for (const auto& a2 : short_words) {
        if (a2.charge() != a0.charge()) continue;
        for (const auto& c0 : short_words) {
          for (const auto& c1 : short_words) {
            if (c1.charge() != c0.charge()) continue;
            for (const auto& c2 : short_words) {
              if (c2.charge() != c0.charge()) continue;
              for (const auto& fp : homs.at({a0, a1})) {
                for (const auto& f : homs.at({a1, a2})) {
                  for (const auto& gp : homs.at({c0, c1})) {
                    for (const auto& g : homs.at({c1, c2})) {
                      const DiagMorphism F(a1, a2, f);
                      const DiagMorphism Fp(a0, a1, fp);
                      const DiagMorphism G(c1, c2, g);
                      const DiagMorphism Gp(c0, c1, gp);
                      record(compose(tensor(F, G), tensor(Fp, Gp)) == tensor(compose(F, Fp), compose(G, Gp)),
                             "interchange " + a0.to_string() + "|" + c0.to_string());
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace rrh::deligne
