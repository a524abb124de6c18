#include "subdepth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "subdepth/cache.hpp"
#include "subdepth/cartan.hpp"
#include "subdepth/depthcore.hpp"
#include "subdepth/error.hpp"
#include "subdepth/groupspec.hpp"
#include "subdepth/kernels.hpp"
#include "subdepth/serialize.hpp"

namespace subdepth::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool certificate = false;
  std::size_t order_cap = kDefaultOrderCap;
  int threads = 0;
  std::string group;
  std::string subgroup;
  std::string file;
  std::optional<int> n;
  std::optional<std::string> parity;
};

struct Output {
  Json doc;
  std::vector<std::string> violations;
  std::optional<std::string> text;  // overrides the generic text rendering
};

// --- rendering -----------------------------------------------------------------

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

bool is_table(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar_array(x); });
}

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string join(const Json& row, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? sep : "") + scalar_text(row[i]);
  return out;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (is_scalar(value)) {
      out << name << ": " << scalar_text(value) << "\n";
    } else if (is_scalar_array(value)) {
      out << name << ": [" << join(value, ", ") << "]\n";
    } else if (is_table(value)) {
      out << name << ":\n";
      for (const auto& row : value) out << "  [" << join(row, " ") << "]\n";
    } else if (value.is_object()) {
      render_text(value, name + ".", out);
    } else {
      for (std::size_t i = 0; i < value.size(); ++i) {
        Json wrapper = {{std::to_string(i), value[i]}};
        render_text(wrapper, name + ".", out);
      }
    }
  }
}

void collect_csv(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& summary,
                 std::ostream& sections) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (is_scalar(value)) {
      summary.emplace_back(name, scalar_text(value));
    } else if (is_scalar_array(value)) {
      sections << "# " << name << "\n" << join(value, ",") << "\n";
    } else if (is_table(value)) {
      sections << "# " << name << "\n";
      for (const auto& row : value) sections << join(row, ",") << "\n";
    } else if (value.is_object()) {
      collect_csv(value, name + ".", summary, sections);
    } else {
      for (std::size_t i = 0; i < value.size(); ++i) {
        Json wrapper = {{std::to_string(i), value[i]}};
        collect_csv(wrapper, name + ".", summary, sections);
      }
    }
  }
}

std::string render(const Output& output, const std::string& format) {
  if (format == "json") return pretty_json(output.doc) + "\n";
  std::ostringstream out;
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> summary;
    std::ostringstream sections;
    collect_csv(output.doc, "", summary, sections);
    out << "# summary\nkey,value\n";
    for (const auto& [k, v] : summary) out << k << "," << v << "\n";
    out << sections.str();
    return out.str();
  }
  if (output.text) return *output.text;
  render_text(output.doc, "", out);
  return out.str();
}

// --- commands ------------------------------------------------------------------

struct Context {
  Options opt;
  TableCache cache;
  SerializeOptions ser;

  PermutationGroup group(const std::string& text) const {
    return build_group(parse_group_spec(text), opt.order_cap);
  }

  SubgroupEmbedding embedding() const {
    PermutationGroup g = group(opt.group);
    PermutationGroup h = group(opt.subgroup);
    if (h.degree() > g.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "subgroup " + h.label() + " acts on " + std::to_string(h.degree()) +
                                                 " points, more than the " + std::to_string(g.degree()) + " of " +
                                                 g.label());
    }
    if (h.degree() < g.degree()) h = h.extended_to_degree(g.degree());
    return SubgroupEmbedding::make(g, h);
  }
};

Json pair_header(const SubgroupEmbedding& emb) {
  return {{"group", emb.supergroup.label()}, {"subgroup", emb.subgroup.label()},
          {"group_order", emb.supergroup.order()}, {"subgroup_order", emb.subgroup.order()}, {"index", emb.index}};
}

Output cmd_classes(Context& ctx) {
  return {classes_json(ctx.group(ctx.opt.group)), {}, {}};
}

Output cmd_chartab(Context& ctx) {
  const auto g = ctx.group(ctx.opt.group);
  const auto table = ctx.cache.get(g);
  Output out{to_json(table), {}, {}};
  const auto check = check_orthogonality(table);
  if (!check.ok()) out.violations.push_back("character table fails the orthogonality relations");
  std::ostringstream text;
  const auto& cls = g.classes();
  text << "group: " << g.label() << "\norder: " << g.order() << "\nclasses: " << cls.size()
       << "\nconductor: " << table.conductor << "\n";
  text << "class sizes: [" << join(Json(cls.class_sizes), ", ") << "]\n";
  text << "element orders: [" << join(Json(cls.element_orders), ", ") << "]\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    text << "X." << (i + 1) << ":";
    for (const auto& v : table.irreducibles[i]) text << " " << v.to_string();
    text << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_depth(Context& ctx) {
  const auto emb = ctx.embedding();
  const auto gt = ctx.cache.get(emb.supergroup);
  const auto ht = ctx.cache.get(emb.subgroup);
  const auto m = induction_restriction_matrix(emb, gt, ht);
  const auto report = min_depth(m.entries);
  const auto interval = subgroup_depth_interval_check(emb, gt, ht);
  const bool normal = is_normal(emb);
  Output out{pair_header(emb), {}, {}};
  out.doc["M"] = to_json(m.entries);
  out.doc["depth"] = to_json(report, ctx.ser);
  out.doc["interval"] = to_json(interval);
  out.doc["normal"] = normal;
  if (!report.ladder_holds()) out.violations.push_back("depth ladder d_h - 2 <= d <= d_h + 1 fails");
  if (!interval.holds) out.violations.push_back("depth outside [2dq+1, 2dq+2]");
  if ((report.d <= 2) != normal) out.violations.push_back("d <= 2 disagrees with normality");
  return out;
}

Output cmd_module_depth(Context& ctx) {
  const auto emb = ctx.embedding();
  const auto ht = ctx.cache.get(emb.subgroup);
  const auto chi = ClassFunction(ht.group, quotient_module_character(emb).values());
  Output out{pair_header(emb), {}, {}};
  out.doc["module"] = to_json(module_depth(chi, ht));
  return out;
}

Output cmd_double(Context& ctx) {
  const auto g = ctx.group(ctx.opt.group);
  const auto report = double_depth(ctx.cache.get(g));
  Output out{{{"group", g.label()}, {"order", g.order()}}, {}, {}};
  out.doc["double"] = to_json(report, ctx.ser);
  if (!report.consistent) out.violations.push_back("double depth cross-checks disagree");
  return out;
}

Output cmd_diag(Context& ctx) {
  const auto g = ctx.group(ctx.opt.group);
  const auto report = diagonal_depth(g, ctx.cache.source(), ctx.opt.order_cap);
  Output out{{{"group", g.label()}, {"order", g.order()}}, {}, {}};
  out.doc["diagonal"] = to_json(report, ctx.ser);
  if (!report.consistent) out.violations.push_back("diagonal depth differs from 2 ell_Q + 1");
  return out;
}

Output cmd_chain(Context& ctx) {
  const auto emb = ctx.embedding();
  const auto ht = ctx.cache.get(emb.subgroup);
  const auto chi = ClassFunction(ht.group, quotient_module_character(emb).values());
  const auto report = support_chain(chi, ht);
  Output out{pair_header(emb), {}, {}};
  out.doc["chain"] = to_json(report);
  if (report.stable_kernel.is_trivial()) {
    const auto bb = burnside_brauer_bound(chi, ht);
    out.doc["burnside_brauer"] = to_json(bb);
    if (!bb.holds) out.violations.push_back("ell exceeds the number of distinct character values");
  } else {
    out.doc["burnside_brauer"] = nullptr;
  }
  if (!report.kernel_matches) out.violations.push_back("stable kernel differs from the character kernel");
  if (!report.bound_holds) out.violations.push_back("ell exceeds the number of irreducibles");
  return out;
}

Output cmd_corefree(Context& ctx) {
  const auto emb = ctx.embedding();
  const auto report = corefree_compare(emb, ctx.cache.source());
  Output out{pair_header(emb), {}, {}};
  out.doc["corefree"] = to_json(report, ctx.ser);
  if (!report.holds()) out.violations.push_back("quotient depth comparison fails");
  return out;
}

Output cmd_cartan(Context& ctx) {
  std::ifstream in(ctx.opt.file);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + ctx.opt.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
  const auto data = algebra_data_from_json(j);
  const auto validation = validate(data);
  Output out{{{"label", data.label}, {"r", data.r}, {"s", data.s}}, {}, {}};
  out.doc["validation"] = to_json(validation);
  Json conditions = Json::array();
  if (ctx.opt.n || ctx.opt.parity) {
    const int n = ctx.opt.n.value_or(1);
    const Parity parity = parse_parity(ctx.opt.parity.value_or("even"));
    conditions.push_back(to_json(necessary_condition(data, n, parity), ctx.ser));
  } else if (validation.problems.empty()) {
    const int cap = static_cast<int>(std::max(data.r, data.s)) + 1;
    for (int n = 1; n <= cap; ++n) {
      conditions.push_back(to_json(necessary_condition(data, n, Parity::Even), ctx.ser));
      conditions.push_back(to_json(necessary_condition(data, n, Parity::Odd), ctx.ser));
    }
  }
  out.doc["conditions"] = std::move(conditions);
  return out;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Subgroup depth calculator", "subdepth"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", opt.cache_dir, "character table cache directory");
  app.add_flag("--no-cache", opt.no_cache, "keep character tables in memory only");
  app.add_flag("--certificate", opt.certificate, "include witness matrices");
  app.add_option("--order-cap", opt.order_cap, "largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  using Handler = Output (*)(Context&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto group_command = [&](const char* name, const char* help, Handler h, bool pair) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("G", opt.group, "group spec")->required();
    if (pair) sub->add_option("H", opt.subgroup, "subgroup spec, generators in the degree of G")->required();
    commands.emplace_back(sub, h);
  };
  group_command("classes", "conjugacy classes", cmd_classes, false);
  group_command("chartab", "character table", cmd_chartab, false);
  group_command("depth", "minimum depth of H in G", cmd_depth, true);
  group_command("module-depth", "depth of the quotient module", cmd_module_depth, true);
  group_command("double", "depth of the group algebra in its Drinfeld double", cmd_double, false);
  group_command("diag", "depth of the diagonal in G x G", cmd_diag, false);
  group_command("chain", "support and kernel chains of the quotient module", cmd_chain, true);
  group_command("corefree", "compare with the corefree quotient pair", cmd_corefree, true);
  auto* cartan = app.add_subcommand("cartan", "necessary conditions for algebra matrix data");
  cartan->add_option("file", opt.file, "JSON file")->required();
  cartan->add_option("--n", opt.n, "exponent")->check(CLI::PositiveNumber);
  cartan->add_option("--parity", opt.parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  commands.emplace_back(cartan, cmd_cartan);

  Result result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    if (opt.threads > 0) kernels::set_threads(opt.threads);
    std::optional<std::filesystem::path> dir;
    if (!opt.no_cache) dir = opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir);
    Context ctx{opt, TableCache(dir), SerializeOptions{opt.certificate}};
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Output output = handler(ctx);
      result.out = render(output, opt.format);
      for (const auto& v : output.violations) result.err += "theorem violation: " + v + "\n";
      result.exit_code = output.violations.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    result.exit_code = is_internal(e.code()) ? 1 : 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::bad_alloc&) {
    result.exit_code = 2;
    result.err = "error: out of memory\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace subdepth::cli
