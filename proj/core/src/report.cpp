#include "conjlat/report.hpp"

#include <chrono>
#include <sstream>

namespace conjlat {

namespace {

AnalysisReport attempt(const IntPolynomial& f, unsigned bits) {
  AnalysisReport rep;
  rep.f = f;
  rep.precision_bits = bits;
  int n = f.degree();
  if (n < 2) throw unsupported_error("degree must be at least 2");
  if (f.leading() < 0)
    throw std::domain_error("leading coefficient must be positive");
  if (n > 2 && !f.is_monic())
    throw unsupported_error("non-monic input only supported for degree 2");

  rep.disc = discriminant(f);
  if (rep.disc == 0)
    throw std::domain_error("reducible: repeated root (discriminant is 0)");
  rep.irreducible = is_irreducible(f);
  if (rep.irreducible == tri::no)
    throw std::domain_error("reducible polynomial");
  if (rep.irreducible == tri::undetermined) {
    rep.undetermined = true;
    rep.notes.push_back("irreducibility undetermined: lattice stages skipped");
    return rep;
  }

  RootSet roots = find_roots(f, bits);
  if (f.is_monic()) {
    rep.pisot = classify_pisot_auto(f, bits);
    if (rep.pisot == tri::undetermined)
      rep.notes.push_back("a root cannot be separated from the unit circle");
  } else {
    rep.pisot = tri::no;
    rep.notes.push_back("non-monic: root is not an algebraic integer");
  }

  rep.galois = classify_galois(f, cycle_type_sample(f, sampling_primes(f)),
                               roots);
  if (rep.galois.kind == GroupKind::Unknown)
    throw unsupported_error(
        "Galois class unsupported: no Gram construction available");
  rep.rank = lattice_rank(f, &roots);
  if (!rep.rank.certified)
    rep.notes.push_back("rank from integer-relation detection (uncertified)");

  try {
    if (n == 2)
      rep.gram = gram_quadratic(f.coeff(2), f.coeff(1), f.coeff(0));
    else
      rep.gram = gram_exact(f, rep.galois, roots);
  } catch (const unsupported_error& e) {
    auto [emb, gnum] = gram_numeric(f, rep.galois, roots);
    rep.gram = std::move(gnum);
    rep.notes.push_back(std::string("tier-N Gram: ") + e.what());
  }
  if (rep.gram->scale != 1)
    rep.notes.push_back("entries describe the scaled lattice a_2 * L_f");
  rep.row_sum_ok = row_sums_ok(*rep.gram, f);
  if (!rep.row_sum_ok)
    throw inconsistency_error("row-sum identity violated: construction bug");
  if (rep.gram->tier == GramTier::Exact)
    verify_galois_isometry(*rep.gram, rep.galois);

  rep.minimal = shortest_vectors(*rep.gram);
  rep.certificate = certify(*rep.gram, *rep.minimal);
  if (rep.gram->tier == GramTier::Exact)
    rep.determinants = determinant_report(*rep.gram, f, rep.galois, &roots);

  if (n == 2) {
    if (f.coeff(1) != 0) {
      rep.planar = planar_wr(f.coeff(2), f.coeff(1), f.coeff(0));
    } else {
      rep.notes.push_back("closed-form planar criterion needs a_1 != 0");
    }
  }
  if (n == 3 && f.coeff(2) != 0) {
    if (rep.galois.kind == GroupKind::Cyclic) {
      rep.cubic = cubic_wr(f);
    } else {
      rep.notes.push_back(
          "cubic criterion hypothesis scope exceeded (splitting degree > 3); "
          "conclusion checked by enumeration only");
    }
  }

  bool prime = true;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) prime = false;
  if (prime && rep.certificate && !rep.minimal->numeric) {
    std::string note;
    if (!divisibility_check(*rep.certificate, f, rep.galois, &note))
      throw inconsistency_error("kissing-number divisibility violated");
    rep.notes.push_back("divisibility: " + note);
  }

  auto flag_und = [](const Flag& fl) { return fl.value == tri::undetermined; };
  if (rep.pisot == tri::undetermined ||
      (rep.certificate &&
       (flag_und(rep.certificate->is_wr) || flag_und(rep.certificate->is_gwr) ||
        flag_und(rep.certificate->is_nearly_orthogonal) ||
        flag_und(rep.certificate->has_minimal_basis))))
    rep.undetermined = true;
  return rep;
}

nlohmann::ordered_json flag_json(const Flag& f) {
  return {{"value", to_string(f.value)}, {"by", f.by}};
}

}  // namespace

AnalysisReport analyze(const IntPolynomial& f, const AnalysisOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  unsigned bits = opt.precision_bits;
  while (true) {
    try {
      AnalysisReport rep = attempt(f, bits);
      rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      return rep;
    } catch (const precision_error&) {
      if (bits >= kMaxPrecisionBits) throw;
      bits *= 2;
    }
  }
}

nlohmann::ordered_json report_json(const AnalysisReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["polynomial"] = rep.f.to_string();
  j["coefficients"] = rep.f.coeff_list_string();
  j["degree"] = rep.f.degree();
  j["discriminant"] = rep.disc.str();
  j["irreducible"] = to_string(rep.irreducible);
  j["pisot"] = to_string(rep.pisot);
  {
    nlohmann::ordered_json g;
    g["group"] = to_string(rep.galois.kind);
    g["splittingDegree"] = rep.galois.splitting_degree.str();
    if (rep.galois.cycle) g["cycle"] = *rep.galois.cycle;
    j["galois"] = std::move(g);
  }
  j["rank"] = {{"value", rep.rank.rank}, {"certified", rep.rank.certified}};
  j["precisionBits"] = rep.precision_bits;
  if (rep.gram) {
    nlohmann::ordered_json g;
    g["tier"] = rep.gram->tier == GramTier::Exact ? "E" : "N";
    g["basisSize"] = rep.gram->basis_size;
    g["scale"] = rep.gram->scale.str();
    if (rep.gram->tier == GramTier::Exact) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : rep.gram->entries) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
      }
      g["entries"] = std::move(rows);
    } else {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : rep.gram->num_entries) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(to_double(e));
        rows.push_back(std::move(r));
      }
      g["entries"] = std::move(rows);
      g["errorBound"] = rep.gram->error_bound;
    }
    g["rowSumOk"] = rep.row_sum_ok;
    j["gram"] = std::move(g);
  }
  if (rep.minimal) {
    nlohmann::ordered_json m;
    if (rep.minimal->numeric) {
      m["minNormSqNumeric"] = to_double(rep.minimal->min_norm_num);
      if (rep.minimal->min_norm_sq != 0)
        m["minNormSq"] = rep.minimal->min_norm_sq.str();
    } else {
      m["minNormSq"] = rep.minimal->min_norm_sq.str();
    }
    m["kissing"] = rep.minimal->kissing;
    nlohmann::ordered_json vecs = nlohmann::ordered_json::array();
    for (const auto& v : rep.minimal->vectors) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& c : v) r.push_back(c.str());
      vecs.push_back(std::move(r));
    }
    m["vectors"] = std::move(vecs);
    j["minimalVectors"] = std::move(m);
  }
  if (rep.certificate) {
    const auto& c = *rep.certificate;
    nlohmann::ordered_json cj;
    cj["rank"] = c.rank;
    cj["minNormSq"] = c.min_norm_sq.str();
    cj["kissing"] = c.kissing;
    cj["isWR"] = flag_json(c.is_wr);
    cj["isGWR"] = flag_json(c.is_gwr);
    cj["isNearlyOrthogonal"] = flag_json(c.is_nearly_orthogonal);
    cj["hasMinimalBasis"] = flag_json(c.has_minimal_basis);
    cj["determinant"] = c.determinant.str();
    cj["notes"] = c.notes;
    j["certificate"] = std::move(cj);
  }
  if (rep.determinants) {
    const auto& d = *rep.determinants;
    nlohmann::ordered_json dj;
    dj["detGram"] = d.det_gram.str();
    dj["detLattice"] = to_double(d.det_lattice);
    if (d.closed_form) {
      dj["closedForm"] = {{"name", d.closed_form->name},
                          {"radicand", d.closed_form->radicand.str()},
                          {"value", to_double(d.closed_form->value)}};
      dj["closedFormAgrees"] = d.closed_form_agrees;
    }
    if (d.circulant_full) {
      dj["circulantFull"] = to_double(*d.circulant_full);
      dj["circulantPartial"] = to_double(*d.circulant_partial);
      dj["circulantAgrees"] = d.circulant_agrees;
    }
    j["determinants"] = std::move(dj);
  }
  if (rep.planar) {
    j["planarCriterion"] = {{"isWR", rep.planar->is_wr},
                            {"minimalVectors", rep.planar->minimal_vectors},
                            {"automorphisms", rep.planar->automorphisms}};
  }
  if (rep.cubic) {
    j["cubicCriterion"] = {
        {"wrByCriterion", to_string(rep.cubic->wr_by_criterion)},
        {"rootsAreMinimal", to_string(rep.cubic->roots_are_minimal)},
        {"note", rep.cubic->note}};
  }
  j["notes"] = rep.notes;
  j["undetermined"] = rep.undetermined;
  return j;
}

std::string report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "polynomial      " << rep.f.to_string() << "\n";
  os << "discriminant    " << rep.disc << "\n";
  os << "irreducible     " << to_string(rep.irreducible) << "\n";
  os << "pisot           " << to_string(rep.pisot) << "\n";
  os << "galois          " << to_string(rep.galois.kind) << " (d = "
     << rep.galois.splitting_degree << ")\n";
  os << "rank            " << rep.rank.rank
     << (rep.rank.certified ? "" : " (uncertified)") << "\n";
  if (rep.gram) {
    os << "gram tier       "
       << (rep.gram->tier == GramTier::Exact ? "E" : "N");
    if (rep.gram->scale != 1) os << "  (scale " << rep.gram->scale << ")";
    os << "\n";
    if (rep.gram->tier == GramTier::Exact) {
      for (const auto& row : rep.gram->entries) {
        os << "  [";
        for (size_t i = 0; i < row.size(); ++i)
          os << (i ? ", " : "") << row[i];
        os << "]\n";
      }
    }
  }
  if (rep.certificate) {
    const auto& c = *rep.certificate;
    os << "minNormSq       " << c.min_norm_sq << "\n";
    os << "kissing         " << c.kissing << "\n";
    os << "isWR            " << to_string(c.is_wr.value) << "\n";
    os << "isGWR           " << to_string(c.is_gwr.value) << "\n";
    os << "nearlyOrth      " << to_string(c.is_nearly_orthogonal.value)
       << "\n";
    os << "minimalBasis    " << to_string(c.has_minimal_basis.value) << "\n";
    os << "det(Gram)       " << c.determinant << "\n";
  }
  if (rep.determinants)
    os << "det(L)          " << to_double(rep.determinants->det_lattice)
       << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << "elapsed         " << rep.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace conjlat
