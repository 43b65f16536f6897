#include "plbranch/report_io.hpp"

#include <sstream>

namespace plbranch {

namespace {

Json optional_array(const std::optional<std::vector<std::int64_t>>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::vector<std::int64_t>> read_optional_array(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::vector<std::int64_t>>();
}

DimensionStatus status_from_string(const std::string& s) {
  if (s == "finite") return DimensionStatus::Finite;
  if (s == "infinite") return DimensionStatus::Infinite;
  if (s == "unknown") return DimensionStatus::Unknown;
  throw std::invalid_argument("unknown dimension status '" + s + "'");
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "not-applicable") return CheckStatus::NotApplicable;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

Json mu_to_json(const MilnorResult& mu) {
  Json j;
  j["status"] = to_string(mu.status);
  switch (mu.status) {
    case DimensionStatus::Finite:
      j["value"] = mu.value;
      j["stabilized_at"] = mu.stabilized_at;
      break;
    case DimensionStatus::Infinite:
      j["reason"] = mu.reason;
      break;
    case DimensionStatus::Unknown:
      j["reason"] = mu.reason;
      j["reached_degree"] = mu.stabilized_at;
      break;
  }
  return j;
}

MilnorResult mu_from_json(const Json& j) {
  MilnorResult mu;
  mu.status = status_from_string(j.at("status").get<std::string>());
  switch (mu.status) {
    case DimensionStatus::Finite:
      mu.value = j.at("value").get<std::int64_t>();
      mu.stabilized_at = j.at("stabilized_at").get<int>();
      break;
    case DimensionStatus::Infinite:
      mu.reason = j.at("reason").get<std::string>();
      break;
    case DimensionStatus::Unknown:
      mu.reason = j.at("reason").get<std::string>();
      mu.stabilized_at = j.at("reached_degree").get<int>();
      break;
  }
  return mu;
}

std::string list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string mu_text(const MilnorResult& mu) {
  switch (mu.status) {
    case DimensionStatus::Finite:
      return std::to_string(mu.value) + " (finite, stabilized_at " + std::to_string(mu.stabilized_at) + ")";
    case DimensionStatus::Infinite:
      return "infinite (" + mu.reason + ")";
    case DimensionStatus::Unknown:
      return "unknown (" + mu.reason + ")";
  }
  return "?";
}

}  // namespace

Json to_json(const BranchReport& r) {
  Json j;
  j["mode"] = r.mode == InputMode::Param ? "param" : "poly";
  j["f"] = r.f;
  j["p"] = r.p;
  j["n"] = r.n;
  j["y_support"] = optional_array(r.y_support);
  j["beta"] = optional_array(r.beta);
  if (r.semigroup) {
    j["beta_bar"] = r.semigroup->betabar;
    j["e"] = r.semigroup->eseq;
    j["n_seq"] = r.semigroup->nseq;
    j["conductor"] = r.semigroup->conductor;
    j["delta"] = r.semigroup->delta;
  } else {
    for (const char* k : {"beta_bar", "e", "n_seq", "conductor", "delta"}) j[k] = nullptr;
  }
  if (r.merle) {
    Json contacts = Json::array();
    for (const auto& q : r.merle->contacts) contacts.push_back({q.num, q.den});
    j["merle"] = {{"orders", r.merle->orders}, {"contacts", contacts}, {"moduli", r.merle->moduli}};
  } else {
    j["merle"] = nullptr;
  }
  if (r.polar_triple) {
    const auto& t = *r.polar_triple;
    j["polar_triple"] = {t.roots_of_unity, t.char_exponents, t.generators};
  } else {
    j["polar_triple"] = nullptr;
  }
  if (!r.i0_f_fy) {
    j["i0_f_fy"] = nullptr;
  } else if (r.i0_f_fy->is_finite()) {
    j["i0_f_fy"] = r.i0_f_fy->value;
  } else {
    j["i0_f_fy"] = {{"status", to_string(r.i0_f_fy->status)}, {"reason", r.i0_f_fy->reason}};
  }
  j["mu"] = mu_to_json(r.mu);
  j["hypotheses"] = {{"p_not_divides_n", r.hypotheses.p_not_divides_n},
                     {"p_greater_than_n", r.hypotheses.p_greater_than_n},
                     {"generators_user_asserted", r.hypotheses.generators_user_asserted},
                     {"swapped_xy", r.hypotheses.swapped_xy}};
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["checks"] = checks;
  const auto& ev = r.conjecture;
  j["conjecture_evidence"] = {{"applicable", ev.applicable},
                              {"regime", ev.regime},
                              {"predicate", ev.predicate},
                              {"mu_equals_c", ev.mu_equals_c ? Json(*ev.mu_equals_c) : Json(nullptr)},
                              {"outcome", ev.outcome},
                              {"note", ev.note}};
  return j;
}

BranchReport report_from_json(const Json& j) {
  BranchReport r;
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "param" && mode != "poly") throw std::invalid_argument("unknown mode '" + mode + "'");
  r.mode = mode == "param" ? InputMode::Param : InputMode::Poly;
  r.f = j.at("f").get<std::string>();
  r.p = j.at("p").get<std::uint32_t>();
  r.n = j.at("n").get<std::int64_t>();
  r.y_support = read_optional_array(j.at("y_support"));
  r.beta = read_optional_array(j.at("beta"));
  if (!j.at("beta_bar").is_null()) {
    SemigroupData sd;
    sd.betabar = j.at("beta_bar").get<std::vector<std::int64_t>>();
    sd.eseq = j.at("e").get<std::vector<std::int64_t>>();
    sd.nseq = j.at("n_seq").get<std::vector<std::int64_t>>();
    sd.conductor = j.at("conductor").get<std::int64_t>();
    sd.delta = j.at("delta").get<std::int64_t>();
    r.semigroup = sd;
  }
  if (const auto& m = j.at("merle"); !m.is_null()) {
    MerleData md;
    md.orders = m.at("orders").get<std::vector<std::int64_t>>();
    for (const auto& q : m.at("contacts")) md.contacts.push_back({q.at(0).get<std::int64_t>(), q.at(1).get<std::int64_t>()});
    md.moduli = m.at("moduli").get<std::vector<std::int64_t>>();
    r.merle = md;
  }
  if (const auto& t = j.at("polar_triple"); !t.is_null())
    r.polar_triple = PolarTriple{t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>(), t.at(2).get<std::int64_t>()};
  if (const auto& i0 = j.at("i0_f_fy"); i0.is_number_integer()) {
    r.i0_f_fy = IntersectionValue{DimensionStatus::Finite, i0.get<std::int64_t>(), {}};
  } else if (!i0.is_null()) {
    r.i0_f_fy = IntersectionValue{status_from_string(i0.at("status").get<std::string>()), 0,
                                  i0.at("reason").get<std::string>()};
  }
  r.mu = mu_from_json(j.at("mu"));
  const auto& h = j.at("hypotheses");
  r.hypotheses.p_not_divides_n = h.at("p_not_divides_n").get<bool>();
  r.hypotheses.p_greater_than_n = h.at("p_greater_than_n").get<bool>();
  r.hypotheses.generators_user_asserted = h.at("generators_user_asserted").get<bool>();
  r.hypotheses.swapped_xy = h.at("swapped_xy").get<bool>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), check_status_from_string(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  const auto& ev = j.at("conjecture_evidence");
  r.conjecture.applicable = ev.at("applicable").get<bool>();
  r.conjecture.regime = ev.at("regime").get<std::string>();
  r.conjecture.predicate = ev.at("predicate").get<bool>();
  if (!ev.at("mu_equals_c").is_null()) r.conjecture.mu_equals_c = ev.at("mu_equals_c").get<bool>();
  r.conjecture.outcome = ev.at("outcome").get<std::string>();
  r.conjecture.note = ev.at("note").get<std::string>();
  return r;
}

Json to_json(const SweepResult& s, std::uint64_t lo, std::uint64_t hi) {
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r));
  Json skipped = Json::array();
  for (const auto& k : s.skipped) skipped.push_back({{"p", k.p}, {"reason", k.reason}});
  Json j;
  j["primes"] = {{"lo", lo}, {"hi", hi}};
  j["rows"] = rows;
  j["skipped"] = skipped;
  return j;
}

std::string render_text(const BranchReport& r) {
  std::ostringstream os;
  os << "mode = " << (r.mode == InputMode::Param ? "param" : "poly") << '\n';
  os << "f = " << r.f << '\n';
  os << "p = " << r.p << '\n';
  os << "n = " << r.n << '\n';
  if (r.y_support) os << "y_support = " << list(*r.y_support) << '\n';
  if (r.beta) os << "beta = " << list(*r.beta) << '\n';
  if (r.semigroup) {
    const auto& sd = *r.semigroup;
    os << "beta_bar = " << list(sd.betabar)
       << (r.hypotheses.generators_user_asserted ? "  (user-asserted)" : "") << '\n';
    os << "e = " << list(sd.eseq) << '\n';
    os << "n_seq = " << list(sd.nseq) << '\n';
    os << "conductor = " << sd.conductor << '\n';
    os << "delta = " << sd.delta << '\n';
  }
  if (r.merle) {
    os << "merle.orders = " << list(r.merle->orders) << '\n';
    os << "merle.contacts = [";
    for (std::size_t i = 0; i < r.merle->contacts.size(); ++i)
      os << (i ? ", " : "") << to_string(r.merle->contacts[i]);
    os << "]\n";
    os << "merle.moduli = " << list(r.merle->moduli) << '\n';
  }
  if (r.polar_triple) {
    const auto& t = *r.polar_triple;
    os << "polar_triple = " << list({t.roots_of_unity, t.char_exponents, t.generators}) << '\n';
  }
  if (r.i0_f_fy) {
    os << "i0_f_fy = ";
    if (r.i0_f_fy->is_finite())
      os << r.i0_f_fy->value << '\n';
    else
      os << to_string(r.i0_f_fy->status) << " (" << r.i0_f_fy->reason << ")\n";
  }
  os << "mu = " << mu_text(r.mu) << '\n';
  const auto& h = r.hypotheses;
  os << "hypotheses: p_not_divides_n = " << yes_no(h.p_not_divides_n)
     << ", p_greater_than_n = " << yes_no(h.p_greater_than_n)
     << ", generators_user_asserted = " << yes_no(h.generators_user_asserted)
     << ", swapped_xy = " << yes_no(h.swapped_xy) << '\n';
  for (const auto& c : r.checks) {
    std::string label = c.name;
    label.resize(std::max<std::size_t>(label.size(), 28), ' ');
    const char* status = c.status == CheckStatus::Pass ? "PASS"
                         : c.status == CheckStatus::Fail ? "FAIL"
                                                         : "n/a ";
    os << "check " << label << ' ' << status << "  " << c.detail << '\n';
  }
  const auto& ev = r.conjecture;
  os << "conjecture_evidence = " << ev.outcome;
  if (ev.applicable) {
    os << " (regime " << ev.regime << ", predicate " << yes_no(ev.predicate) << ", mu_equals_c "
       << (ev.mu_equals_c ? yes_no(*ev.mu_equals_c) : std::string("unknown")) << ")";
  }
  os << '\n';
  if (!ev.note.empty()) os << "conjecture_note = " << ev.note << '\n';
  return os.str();
}

std::string render_text(const SweepResult& s) {
  std::ostringstream os;
  os << "p       beta_bar              c     mu              mu=c   conjecture        checks\n";
  for (const auto& r : s.rows) {
    std::string bb = r.semigroup ? list(r.semigroup->betabar) : "-";
    std::string c = r.semigroup ? std::to_string(r.semigroup->conductor) : "-";
    std::string mu = r.mu.is_finite() ? std::to_string(r.mu.value) : std::string(to_string(r.mu.status));
    std::string eq = !r.semigroup ? "-" : (r.mu.is_finite() && r.mu.value == r.semigroup->conductor ? "yes" : "no");
    std::size_t fails = 0, passes = 0;
    for (const auto& ch : r.checks) {
      fails += ch.status == CheckStatus::Fail;
      passes += ch.status == CheckStatus::Pass;
    }
    auto pad = [](std::string v, std::size_t w) {
      v.resize(std::max(v.size(), w), ' ');
      return v;
    };
    os << pad(std::to_string(r.p), 8) << pad(bb, 22) << pad(c, 6) << pad(mu, 16) << pad(eq, 7)
       << pad(r.conjecture.outcome, 18) << (fails ? "FAIL " : "ok ") << passes << " pass, " << fails
       << " fail\n";
  }
  for (const auto& k : s.skipped) os << "skipped p = " << k.p << ": " << k.reason << '\n';
  return os.str();
}

}  // namespace plbranch
