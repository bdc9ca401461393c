#include "rcm/classpoly.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcm/etaeval.hpp"
#include "rcm/parallel.hpp"
#include "rcm/reciprocity.hpp"

namespace rcm {

std::string kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::pn: return "pn";
    case PolyKind::qn: return "qn";
    case PolyKind::g2pow12: return "g2-12";
    default: return "g2-6";
  }
}

std::optional<PolyKind> kind_from_name(const std::string& s) {
  if (s == "pn") return PolyKind::pn;
  if (s == "qn") return PolyKind::qn;
  if (s == "g2-12" || s == "g2pow12") return PolyKind::g2pow12;
  if (s == "g2-6" || s == "g2pow6") return PolyKind::g2pow6;
  return std::nullopt;
}

PolyZ ClassPolynomial::to_polyz() const {
  PolyZ p;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p.push_back(it->first);
  return p;
}

std::string ClassPolynomial::str() const {
  std::string out;
  long deg = degree();
  for (long k = 0; k <= deg; ++k) {
    const auto& [u, v] = coeffs[k];
    if (u == 0 && v == 0) continue;
    std::string piece;
    if (v == 0) {
      piece = u.get_str();
    } else if (u == 0) {
      piece = v.get_str() + "*sqrt(D')";
    } else {
      piece = "(" + u.get_str() + (v > 0 ? "+" : "") + v.get_str() + "*sqrt(D'))";
    }
    if (!out.empty()) out += " + ";
    long e = deg - k;
    if (e == 0) {
      out += piece;
    } else {
      out += (piece == "1" ? "" : piece + "*") + "x" + (e == 1 ? "" : "^" + std::to_string(e));
    }
  }
  return out.empty() ? "0" : out;
}

std::string ClassPolynomial::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["kind"] = kind_name(kind);
  j["degree"] = degree();
  j["prec_used"] = prec_used;
  j["max_residual"] = max_residual;
  if (is_integer_kind()) {
    std::vector<std::string> cs;
    for (const auto& [u, v] : coeffs) cs.push_back(u.get_str());
    j["coeffs"] = cs;
  } else {
    j["core"] = core;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [u, v] : coeffs)
      arr.push_back({{"u", u.get_str()}, {"v", v.get_str()}});
    j["coeffs"] = arr;
  }
  return j.dump();
}

ClassPolynomial ClassPolynomial::from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  ClassPolynomial p;
  p.n = j.at("n").get<long>();
  p.kind = *kind_from_name(j.at("kind").get<std::string>());
  p.prec_used = j.value("prec_used", 0L);
  p.max_residual = j.value("max_residual", 0.0);
  p.core = j.value("core", 0L);
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      p.coeffs.push_back({mpz_class(c.get<std::string>()), mpz_class(0)});
    } else {
      p.coeffs.push_back({mpz_class(c.at("u").get<std::string>()),
                          mpz_class(c.at("v").get<std::string>())});
    }
  }
  return p;
}

long choose_precision(long n, PolyKind kind) {
  (void)kind;
  auto forms = enumerate_reduced(-n);
  double inv_a = 0.0;
  for (const auto& f : forms) inv_a += 1.0 / static_cast<double>(f.a);
  double bits = 3.14159265358979323846 * std::sqrt(static_cast<double>(n)) /
                0.69314718055994530942 * inv_a;
  long h = static_cast<long>(forms.size());
  long p = static_cast<long>(std::ceil(bits)) + 16 * h + 64;
  return std::max(192L, p);
}

namespace {

struct Recognized {
  std::vector<std::pair<mpz_class, mpz_class>> coeffs;
  double max_residual = 0.0;
};

// Multiply out prod (x - r) over the given roots and round each coefficient
// into Z + Z*sqrt(core) (core = 0 demands plain integers). Coefficients come
// back descending, leading term first.
Recognized assemble(const std::vector<BigComplex>& roots, long core, long wp) {
  std::vector<BigComplex> c;  // ascending during the build
  c.reserve(roots.size() + 1);
  c.push_back(BigComplex::one(wp));
  for (const auto& r : roots) {
    c.push_back(BigComplex(wp));
    for (size_t k = c.size() - 1; k >= 1; --k) {
      c[k] = c[k - 1] - r * c[k];
    }
    c[0] = -r * c[0];
  }
  Recognized out;
  BigFloat sqcore = BigFloat::of(0, wp);
  if (core != 0) sqcore = BigFloat::of(mpz_class(-core), wp).sqrt();
  for (size_t k = c.size(); k-- > 0;) {
    mpz_class u = c[k].re.round_to_mpz();
    mpz_class v = 0;
    double ru = (c[k].re - BigFloat::of(u, wp)).abs().to_double();
    double rv;
    if (core == 0) {
      rv = c[k].im.abs().to_double();
    } else {
      BigFloat vf = c[k].im / sqcore;
      v = vf.round_to_mpz();
      rv = (c[k].im - BigFloat::of(v, wp) * sqcore).abs().to_double();
    }
    out.coeffs.push_back({u, v});
    out.max_residual = std::max({out.max_residual, ru, rv});
  }
  return out;
}

ClassPolynomial build_impl(PolyKind kind, long n, long prec, int jobs) {
  Discriminant disc = Discriminant::of_n(n);
  bool ramanujan = (kind == PolyKind::pn || kind == PolyKind::qn);
  if (ramanujan && disc.residue_class != 19)
    throw std::invalid_argument(kind_name(kind) + " needs n = 19 mod 24");
  if (!ramanujan && disc.residue_class != 3)
    throw std::invalid_argument(kind_name(kind) + " needs n = 3 mod 24");

  long base_prec = prec > 0 ? prec : choose_precision(n, kind);
  auto forms = enumerate_reduced(disc);
  long h = static_cast<long>(forms.size());

  FunctionExpr base;
  switch (kind) {
    case PolyKind::pn:
    case PolyKind::qn: base = FunctionExpr::monomial(CycRat::integer(1), {0, 0, 12, 12}); break;
    case PolyKind::g2pow12: base = FunctionExpr::g_power(2, 12); break;
    case PolyKind::g2pow6: base = FunctionExpr::g_power(2, 6); break;
  }

  std::string diag;
  for (int attempt = 0; attempt <= 2; ++attempt) {
    long wp = base_prec << attempt;
    std::vector<BigComplex> values(h, BigComplex(wp));
    std::vector<FunctionExpr> exprs(h);
    for (long i = 0; i < h; ++i) exprs[i] = conjugate_descriptor(forms[i], base).expr;
    parallel_for(h, jobs, [&](long i) {
      values[i] = evaluate_expr(exprs[i], tau_of_form(forms[i], wp), wp);
    });

    std::vector<BigComplex> roots;
    BigFloat f27 = BigFloat::of(27, wp);
    for (const auto& v : values) {
      switch (kind) {
        case PolyKind::pn: {
          BigComplex vr = v.recip();
          roots.push_back(BigComplex(f27 * vr.re, f27 * vr.im));
          roots.push_back(BigComplex(v.re / f27, v.im / f27));
          break;
        }
        case PolyKind::qn: {
          BigComplex vr = v.recip();
          roots.push_back(BigComplex(f27 * vr.re + v.re / f27, f27 * vr.im + v.im / f27));
          break;
        }
        default: roots.push_back(v);
      }
    }

    long core = (kind == PolyKind::g2pow6) ? disc.core : 0;
    Recognized rec = assemble(roots, core, wp);
    if (rec.max_residual < 0.01) {
      ClassPolynomial p;
      p.kind = kind;
      p.n = n;
      p.core = disc.core;
      p.coeffs = std::move(rec.coeffs);
      p.prec_used = wp;
      p.max_residual = rec.max_residual;
      return p;
    }
    diag += " attempt@" + std::to_string(wp) + "bits residual=" +
            std::to_string(rec.max_residual);
  }
  throw NumericFailure("class polynomial rounding failed for n=" + std::to_string(n) +
                       " kind=" + kind_name(kind) + ":" + diag);
}

}  // namespace

ClassPolynomial build_pn(long n, long prec) { return build_impl(PolyKind::pn, n, prec, 0); }
ClassPolynomial build_qn(long n, long prec) { return build_impl(PolyKind::qn, n, prec, 0); }
ClassPolynomial build_g2pow12(long n, long prec) {
  return build_impl(PolyKind::g2pow12, n, prec, 0);
}
ClassPolynomial build_g2pow6(long n, long prec) {
  return build_impl(PolyKind::g2pow6, n, prec, 0);
}
ClassPolynomial build_classpoly(PolyKind kind, long n, long prec, int jobs) {
  return build_impl(kind, n, prec, jobs);
}

bool verify_palindrome(const ClassPolynomial& p) {
  if (p.kind != PolyKind::pn) return false;
  long deg = p.degree();
  for (long k = 0; k <= deg; ++k) {
    if (p.coeffs[k].first != p.coeffs[deg - k].first) return false;
    if (p.coeffs[k].second != 0) return false;
  }
  return p.coeffs[deg].first == 1;
}

std::optional<ClassPolynomial> PolyCache::lookup(PolyKind kind, long n) const {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  std::optional<ClassPolynomial> found;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      ClassPolynomial p = ClassPolynomial::from_json(line);
      if (p.kind == kind && p.n == n) found = std::move(p);
    } catch (...) {
      continue;  // skip malformed lines
    }
  }
  return found;
}

void PolyCache::append(const ClassPolynomial& p) const {
  std::ofstream out(path, std::ios::app);
  out << p.to_json() << "\n";
}

}  // namespace rcm
