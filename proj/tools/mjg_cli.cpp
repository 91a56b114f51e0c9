#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mjg/json_io.hpp"
#include "mjg/suite.hpp"

namespace {

using namespace mjg;

constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxCensusN = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  int n = 0, k = 0;
  std::string I;
};

IndexSet parsed(const Instance& in) {
  try {
    const IndexSet I = parse_index_set(in.I, in.k);
    check_classify_parameters(in.n, in.k, I);
    return I;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string table_row(const Verdict& v) {
  std::ostringstream os;
  os << "J(" << v.n << "," << v.k << ")_" << format_index_set(v.I) << "  aut=" << v.aut.structure
     << "  cayley=" << (v.cayley.yes ? "YES" : "NO");
  for (int c : v.cayley.cases) os << " c" << c;
  os << "  2-reg=" << (v.two_regular.yes ? "YES" : "NO");
  for (int c : v.two_regular.cases) os << " c" << c;
  os << "  d=" << (v.deficiency.exact ? v.deficiency.value.str()
                                      : "[" + v.deficiency.lower.str() + "," + v.deficiency.upper.str() + "]");
  if (!v.connected) os << "  disconnected";
  return os.str();
}

int cmd_classify(const Instance& in, const std::string& format) {
  const auto v = classify(in.n, in.k, parsed(in));
  std::cout << (format == "table" ? table_row(v) : verdict_json(v).dump()) << "\n";
  return 0;
}

int cmd_census(int n_max, const std::string& format) {
  if (n_max > kMaxCensusN) throw UsageError("census: n_max must be at most 14");
  struct Key {
    int n, k;
    IndexSet I;
  };
  std::vector<Key> keys;
  for (int n = 4; n <= n_max; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (IndexSet I = 2; I <= full_index_set(k); I += 2) keys.push_back({n, k, I});
  std::vector<Verdict> rows(keys.size());
  parallel_for(keys.size(), thread_count(), [&](std::size_t i) { rows[i] = classify(keys[i].n, keys[i].k, keys[i].I); });
  std::size_t cayley = 0, disconnected = 0, two = 0, neither = 0;
  for (const auto& v : rows) {
    std::cout << (format == "table" ? table_row(v) : verdict_json(v).dump()) << "\n";
    cayley += v.cayley.yes && !v.cayley.disconnected;
    disconnected += v.cayley.yes && v.cayley.disconnected;
    two += v.two_regular.yes;
    neither += !v.cayley.yes && !v.two_regular.yes;
  }
  Json summary{{"instances", rows.size()}, {"cayley", cayley},
               {"regular_disconnected", disconnected}, {"two_regular", two}, {"neither", neither}};
  std::cout << (format == "table" ? "summary " + summary.dump() : Json{{"summary", summary}}.dump()) << "\n";
  return 0;
}

int cmd_graph_export(const Instance& in, const std::string& format, const std::string& path) {
  const IndexSet I = parsed(in);
  if (in.n > kMaxGround) throw UsageError("graph export: n must be at most 64");
  const auto J = build_graph(in.n, in.k, I);
  std::string text;
  if (format == "edges") text = edge_list_text(J);
  else if (format == "dimacs") text = dimacs_text(J);
  else text = graph_json(J).dump() + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open " + path);
    out << text;
  }
  return 0;
}

struct GroupOptions {
  std::uint64_t q = 0;
  unsigned d = 1;
  std::uint32_t p = 0;
  int variant = 1;
  int delta = 1;
  int k = 0;  // when positive, emit the action on k-subsets
};

Json emit_group(const PermutationGroup& G, const std::string& name, int k) {
  if (k <= 0) return group_json(G, name);
  if (2 * k > static_cast<int>(G.degree())) throw UsageError("group build: need 2k <= degree");
  return group_json(induced_subset_action(G, k), name + " on " + std::to_string(k) + "-subsets");
}

int cmd_group_build(const std::string& kind, const GroupOptions& o) {
  try {
    if (kind == "psl28-complement") {
      if (o.delta < 0 || o.delta > 3) throw UsageError("group build: delta must be 0..3");
      const CocycleData data(build_pointed_psl28());
      std::cout << complement_json(complement_group(data, o.delta)).dump() << "\n";
      return 0;
    }
    if (kind == "exceptional") {
      const auto r = exceptional_group(exceptional_spec(o.p, o.variant));
      auto j = emit_group(r.group, "AGL_1(exceptional " + r.spec.structure + ")", o.k);
      j["structure"] = r.spec.structure;
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (o.q < 2) throw UsageError("group build: --q is required");
    const unsigned d = kind == "dickson" ? o.d : 1;
    const auto F = build_dickson(o.q, d);
    AffineKind ak = AffineKind::AGL;
    if (kind == "ahl") ak = AffineKind::AHL;
    else if (kind == "agammal") ak = AffineKind::AGammaL;
    const std::string fname = d == 1 ? "GF(" + std::to_string(o.q) + ")"
                                     : "Dickson(" + std::to_string(o.q) + "," + std::to_string(d) + ")";
    const std::string gname = (ak == AffineKind::AHL ? "AHL_1(" : ak == AffineKind::AGammaL ? "AGammaL_1(" : "AGL_1(");
    auto j = emit_group(affine_group(F, ak), gname + fname + ")", o.k);
    if (kind == "dickson") j["near_field"] = near_field_json(F);
    std::cout << j.dump() << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_verify(const std::string& suite) {
  const bool full = suite == "full";
  std::vector<SuiteClaim> selected;
  for (auto& c : verification_claims())
    if (full || !c.full_only) selected.push_back(std::move(c));
  const auto reports = run_claims(selected, thread_count());
  bool all = true;
  for (const auto& r : reports) {
    std::cout << report_json(r).dump() << "\n";
    all = all && r.confirmed;
  }
  return all ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Merged Johnson graphs: Cayley and 2-regular classification"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Accepted for interface stability; all algorithms are deterministic");

  Instance in;
  std::string format = "json";
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("-n", in.n, "Ground set size")->required();
    sub->add_option("-k", in.k, "Subset size")->required();
    sub->add_option("-I", in.I, "Index set, 1-based comma list")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify one J(n,k)_I");
  add_instance(classify_cmd);
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  int n_max = 0;
  auto* census_cmd = app.add_subcommand("census", "Classify every J(n,k)_I with n <= n_max");
  census_cmd->add_option("--n-max", n_max)->required();
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* export_cmd = graph_cmd->add_subcommand("export", "Export J(n,k)_I");
  add_instance(export_cmd);
  std::string graph_format = "edges", path;
  export_cmd->add_option("--format", graph_format)->check(CLI::IsMember({"edges", "json", "dimacs"}));
  export_cmd->add_option("-o,--output", path);

  auto* group_cmd = app.add_subcommand("group", "Group constructions");
  group_cmd->require_subcommand(1);
  auto* build_cmd = group_cmd->add_subcommand("build", "Build a witness group");
  std::string kind;
  GroupOptions go;
  build_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"ahl", "agl", "agammal", "dickson", "exceptional", "psl28-complement"}));
  build_cmd->add_option("--q", go.q, "Field order, or Dickson base q");
  build_cmd->add_option("--d", go.d, "Dickson exponent");
  build_cmd->add_option("--p", go.p, "Prime of an exceptional near-field");
  build_cmd->add_option("--variant", go.variant, "Exceptional variant (two exist for p = 11)");
  build_cmd->add_option("--delta", go.delta, "Complement class label 0..3");
  build_cmd->add_option("-k", go.k, "Emit the induced action on k-subsets");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "fast";
  verify_cmd->add_option("suite", suite)->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(in, format);
    if (*census_cmd) return cmd_census(n_max, format);
    if (*export_cmd) return cmd_graph_export(in, graph_format, path);
    if (*build_cmd) return cmd_group_build(kind, go);
    if (*verify_cmd) return cmd_verify(suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
