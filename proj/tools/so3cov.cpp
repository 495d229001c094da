// Command-line front end: verification suites, multiplicity queries, Hilbert
// series expansion, tableau enumeration, highest weight vectors, dimension
// checks. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "so3cov/verify.hpp"
#include "so3cov/weak_identities.hpp"

using namespace so3cov;
using nlohmann::ordered_json;

namespace {

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(const std::string& csv) {
  auto v = parse_ints(csv);
  return Partition(v);
}

int cmd_verify(const std::vector<std::string>& ids, bool all, const std::string& format,
               const VerifyOptions& opts) {
  std::vector<std::string> selected = ids;
  if (all) selected.clear();
  if (!all && selected.empty()) {
    std::cerr << "verify: give check ids or --all\n";
    return 2;
  }
  for (const auto& id : selected)
    if (!known_check(id)) {
      std::cerr << "unknown check id: " << id << "\n";
      return 2;
    }
  auto results = run_checks(selected, opts);
  if (format == "json")
    std::cout << report_json(results) << "\n";
  else
    std::cout << report_text(results);
  for (const auto& r : results)
    if (!r.ok) return 1;
  return 0;
}

int cmd_multiplicity(const std::string& nu_csv, int degree, const std::string& algebra,
                     const std::string& format) {
  if (!nu_csv.empty()) {
    Partition nu = parse_partition(nu_csv);
    if (nu.rows() > 3) {
      std::cerr << "multiplicity: at most three parts\n";
      return 2;
    }
    ordered_json o;
    o["schema"] = 1;
    o["nu"] = {nu.part(0), nu.part(1), nu.part(2)};
    std::string text;
    if (algebra == "F3") {
      o["m_F"] = multiplicity_F(nu);
      text = std::to_string(multiplicity_F(nu));
    } else if (algebra == "E3") {
      o["m_E"] = multiplicity_E(nu);
      text = std::to_string(multiplicity_E(nu));
    } else if (algebra == "center") {
      o["center_E"] = center_E(nu);
      o["center_F"] = center_F(nu);
      text = "center_E=" + std::to_string(center_E(nu)) +
             " center_F=" + std::to_string(center_F(nu));
    } else {
      std::cerr << "multiplicity: algebra must be F3, E3 or center\n";
      return 2;
    }
    if (format == "json")
      std::cout << o.dump(2) << "\n";
    else
      std::cout << text << "\n";
    return 0;
  }
  if (degree < 0 || degree > 40) {
    std::cerr << "multiplicity: need --nu or a sensible --degree\n";
    return 2;
  }
  auto rows = multiplicity_table(degree);
  if (format == "csv")
    std::cout << multiplicity_csv(rows);
  else if (format == "json")
    std::cout << multiplicity_json(rows) << "\n";
  else
    std::cout << multiplicity_csv(rows);
  return 0;
}

int cmd_hilbert(const std::string& component, int degree, const std::string& format) {
  if (degree < 0 || degree > 20) {
    std::cerr << "hilbert: degree must be between 0 and 20\n";
    return 2;
  }
  auto tau = VarTable::tau();
  MultiPoly p = MultiPoly::zero(tau);
  if (component == "C1")
    p = hilbert_C1(tau).expand(degree);
  else if (component == "C2")
    p = hilbert_C2(tau).expand(degree);
  else if (component == "C3")
    p = hilbert_C3(tau).expand(degree);
  else if (component == "E3")
    p = (hilbert_C1(tau) + hilbert_C2(tau) + hilbert_C3(tau)).expand(degree);
  else {
    std::cerr << "hilbert: component must be C1, C2, C3 or E3\n";
    return 2;
  }
  if (format == "json") {
    ordered_json o;
    o["schema"] = 1;
    o["component"] = component;
    o["degree"] = degree;
    o["expansion"] = p.str();
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int cmd_tableaux(const std::string& shape_csv, const std::string& content_csv,
                 const std::string& format) {
  Partition shape = parse_partition(shape_csv);
  auto content = parse_ints(content_csv);
  auto list = enumerate_ssyt(shape, content);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& t : list) arr.push_back(t.str());
    ordered_json o;
    o["schema"] = 1;
    o["shape"] = shape_csv;
    o["count"] = list.size();
    o["tableaux"] = arr;
    std::cout << o.dump(2) << "\n";
  } else {
    for (const auto& t : list) std::cout << t.str() << "\n";
    std::cout << "count: " << list.size() << "\n";
  }
  return 0;
}

int cmd_hwv(const std::string& nu_csv, int index, const std::string& format) {
  Partition nu = parse_partition(nu_csv);
  if (nu.rows() > 3 || nu.size() > 12) {
    std::cerr << "hwv: nu must have at most three parts and size <= 12\n";
    return 2;
  }
  auto cert = cocharacter_lower_bound(nu);
  if (index < 0 || index >= static_cast<int>(cert.hwvs.size())) {
    std::cerr << "hwv: index out of range (0.." << cert.hwvs.size() - 1 << ")\n";
    return 2;
  }
  auto a = concrete_basis(VarTable::coeffs(1));
  std::vector<PolyMatrix> as{a[0], a[1], a[2]};
  auto eval = cert.hwvs[static_cast<std::size_t>(index)].evaluate(as);
  if (format == "json") {
    ordered_json o;
    o["schema"] = 1;
    o["nu"] = {nu.part(0), nu.part(1), nu.part(2)};
    o["index"] = index;
    o["hwv"] = cert.hwvs[static_cast<std::size_t>(index)].str();
    o["evaluation"] = eval.str();
    o["rank_found"] = cert.rank;
    o["rank_expected"] = cert.expected;
    o["status"] = cert.ok ? "pass" : "fail";
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << cert.hwvs[static_cast<std::size_t>(index)].str() << "\n";
    std::cout << "evaluation at (a1,a2,a3): " << eval.str() << "\n";
    std::cout << "rank " << cert.rank << " of expected " << cert.expected
              << (cert.ok ? " OK" : " MISMATCH") << "\n";
  }
  return cert.ok ? 0 : 1;
}

int cmd_dimcheck(const std::string& multideg_csv, const std::string& algebra,
                 const std::string& format) {
  auto d = parse_ints(multideg_csv);
  if (d.size() != 3 || d[0] < 0 || d[1] < 0 || d[2] < 0) {
    std::cerr << "dimcheck: --multidegree needs three nonnegative integers\n";
    return 2;
  }
  int total = d[0] + d[1] + d[2];
  if (total > 8) {
    std::cerr << "dimcheck: total degree bound is 8\n";
    return 2;
  }
  std::vector<std::pair<std::string, Algebra>> algs;
  if (algebra == "F3")
    algs = {{"F3", Algebra::F3}};
  else if (algebra == "E3")
    algs = {{"E3", Algebra::E3}};
  else if (algebra == "center")
    algs = {{"center_E", Algebra::CenterE}, {"center_F", Algebra::CenterF}};
  else {
    std::cerr << "dimcheck: algebra must be F3, E3 or center\n";
    return 2;
  }
  if (algebra == "center" && total > 6) {
    std::cerr << "dimcheck: total degree bound is 6 for center\n";
    return 2;
  }
  bool all_ok = true;
  ordered_json arr = ordered_json::array();
  std::array<int, 3> dd{d[0], d[1], d[2]};
  for (const auto& [name, alg] : algs) {
    long oracle = graded_dim_oracle(alg, dd);
    long formula = dim_from_multiplicities(alg, dd);
    bool ok = oracle == formula;
    all_ok = all_ok && ok;
    if (format == "json") {
      ordered_json o;
      o["algebra"] = name;
      o["oracle"] = oracle;
      o["formula"] = formula;
      o["status"] = ok ? "pass" : "fail";
      arr.push_back(o);
    } else {
      std::cout << (algs.size() > 1 ? name + ": " : std::string()) << "oracle=" << oracle
                << " formula=" << formula << (ok ? " OK" : " MISMATCH") << "\n";
    }
  }
  if (format == "json") {
    ordered_json o;
    o["schema"] = 1;
    o["multidegree"] = {d[0], d[1], d[2]};
    o["results"] = arr;
    std::cout << o.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suite for covariants and weak identities of 3x3 "
               "skew-symmetric matrices"};
  app.require_subcommand(1);

  std::string format = "text";
  int jobs = 1;
  std::uint64_t seed = 20250808;

  // verify
  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::vector<std::string> ids;
  bool all = false;
  int vdegree = -1;
  verify->add_option("ids", ids, "check ids to run");
  verify->add_flag("--all", all, "run every registered check");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 64));
  verify->add_option("--seed", seed, "seed for the SO3 sampler");
  verify->add_option("--degree", vdegree, "override the cocharacter sweep bound")
      ->check(CLI::Range(0, 8));
  verify->add_flag("--list", "list check ids and exit");

  // multiplicity
  auto* mult = app.add_subcommand("multiplicity", "cocharacter multiplicities");
  std::string nu_csv, algebra = "F3";
  int mdegree = -1;
  mult->add_option("--nu", nu_csv, "partition, e.g. 4,2,0");
  mult->add_option("--degree", mdegree, "emit the full table up to this degree");
  mult->add_option("--algebra", algebra)->check(CLI::IsMember({"F3", "E3", "center"}));
  mult->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "truncated Hilbert series");
  std::string component = "C1";
  int hdegree = 3;
  hil->add_option("--component", component)->check(CLI::IsMember({"C1", "C2", "C3", "E3"}));
  hil->add_option("--degree", hdegree, "truncation degree");
  hil->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // tableaux
  auto* tab = app.add_subcommand("tableaux", "enumerate semistandard tableaux");
  std::string shape_csv, content_csv;
  tab->add_option("--shape", shape_csv, "partition, e.g. 2,2,1")->required();
  tab->add_option("--content", content_csv, "content counts, e.g. 2,2,1")->required();
  tab->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // hwv
  auto* hwv = app.add_subcommand("hwv", "highest weight vector from the certificate pipeline");
  std::string hnu;
  int index = 0;
  hwv->add_option("--nu", hnu, "partition, e.g. 4,2,0")->required();
  hwv->add_option("--index", index, "which certificate member");
  hwv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // dimcheck
  auto* dim = app.add_subcommand("dimcheck", "oracle vs formula dimension");
  std::string multideg;
  dim->add_option("--multidegree", multideg, "e.g. 1,1,0")->required();
  dim->add_option("--algebra", algebra)->check(CLI::IsMember({"F3", "E3", "center"}));
  dim->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (verify->count("--list")) {
        for (const auto& [id, loc] : check_catalog()) std::cout << id << "\t" << loc << "\n";
        return 0;
      }
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.seed = seed;
      if (vdegree >= 0) opts.cocharacter_degree = vdegree;
      return cmd_verify(ids, all, format, opts);
    }
    if (mult->parsed()) return cmd_multiplicity(nu_csv, mdegree, algebra, format);
    if (hil->parsed()) return cmd_hilbert(component, hdegree, format);
    if (tab->parsed()) return cmd_tableaux(shape_csv, content_csv, format);
    if (hwv->parsed()) return cmd_hwv(hnu, index, format);
    if (dim->parsed()) return cmd_dimcheck(multideg, algebra, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
