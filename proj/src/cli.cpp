#include "flagorbits/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "flagorbits/jsonio.hpp"

namespace flagorbits {

namespace {

struct SetupFlags {
  std::string type;
  int n = 0;
  std::string blocks;  // comma-separated B1/B2
  std::string signs;   // +/- string
  int p = -1, q = -1;
};

void add_setup_flags(CLI::App* cmd, SetupFlags& f) {
  cmd->add_option("--type", f.type, "type tag: A1 A2 A3 BD1 C1 C2 D3")->required();
  cmd->add_option("--n", f.n, "window dimension")->required();
  cmd->add_option("--blocks", f.blocks, "omega blocks, e.g. B2,B1,B1 (default per type)");
  cmd->add_option("--signs", f.signs, "sign pattern, e.g. ++-- (default from --p)");
  cmd->add_option("--p", f.p, "number of + signs when --signs is omitted");
  cmd->add_option("--q", f.q, "number of - signs (must equal n - p)");
}

SpaceSetup setup_from_flags(const SetupFlags& f) {
  auto type = type_from_name(f.type);
  if (!type) throw CLI::ValidationError("--type", "unknown type tag " + f.type);
  json j{{"type", f.type}, {"n", f.n}};
  bool has_omega = *type != TypeTag::A3;
  bool has_signs = *type != TypeTag::A1 && *type != TypeTag::A2;
  if (has_omega) {
    json blocks = json::array();
    if (!f.blocks.empty()) {
      std::stringstream ss(f.blocks);
      std::string tok;
      while (std::getline(ss, tok, ',')) blocks.push_back(tok);
    } else {
      int unit = (*type == TypeTag::A1 || *type == TypeTag::BD1) ? 1 : 2;
      for (int pos = 0; pos < f.n; pos += unit) blocks.push_back(unit == 1 ? "B1" : "B2");
    }
    j["blocks"] = std::move(blocks);
  }
  if (has_signs) {
    std::string signs = f.signs;
    if (signs.empty()) {
      if (*type == TypeTag::C1 || *type == TypeTag::D3) {
        for (int i = 0; i < f.n; ++i) signs += (i % 2 == 0) ? '+' : '-';
      } else {
        if (f.p < 0) throw CLI::ValidationError("--p", "required when --signs is omitted");
        if (f.q >= 0 && f.p + f.q != f.n)
          throw CLI::ValidationError("--q", "p + q must equal n");
        signs = std::string(f.p, '+') + std::string(f.n - f.p, '-');
      }
    }
    j["signs"] = signs;
  }
  return setup_from_json(j);
}

json read_json(std::istream& in) {
  json j;
  in >> j;
  return j;
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

struct IndFlags {
  std::string file;
  std::string type, omega_prefix, omega_tail, signs_prefix, signs_tail, order = "NAT";
};

IndSetup ind_setup_from_flags(const IndFlags& f, std::istream&) {
  if (!f.file.empty()) {
    std::ifstream fs(f.file);
    if (!fs) throw std::runtime_error("cannot open " + f.file);
    return ind_setup_from_json(read_json(fs));
  }
  json j{{"type", f.type}};
  if (!f.omega_tail.empty()) {
    json prefix = json::array();
    if (!f.omega_prefix.empty()) {
      std::stringstream ss(f.omega_prefix);
      std::string tok;
      while (std::getline(ss, tok, ',')) prefix.push_back(tok);
    }
    j["omega_prefix"] = std::move(prefix);
    j["omega_tail"] = f.omega_tail;
  }
  if (!f.signs_tail.empty()) {
    j["signs_prefix"] = f.signs_prefix;
    j["signs_tail"] = f.signs_tail;
  }
  j["order"] = json{{"family", f.order}};
  return ind_setup_from_json(j);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact orbit classification and duality on flag varieties"};
  app.require_subcommand(1);

  SetupFlags sf;
  std::string family = "K";
  std::string format = "json";
  IndFlags indf;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the orbit parameters of a setup");
  add_setup_flags(enumerate, sf);
  enumerate->add_option("--format", format, "json | ascii | dot");

  CLI::App* counts = app.add_subcommand("counts", "parameter / closed / open orbit counts");
  add_setup_flags(counts, sf);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "flag JSON on stdin -> orbit parameter JSON");
  add_setup_flags(classify_cmd, sf);
  classify_cmd->add_option("--family", family, "K | G0");

  CLI::App* represent =
      app.add_subcommand("represent", "orbit parameter JSON on stdin -> representative flag");
  add_setup_flags(represent, sf);
  represent->add_option("--family", family, "K | G0");

  CLI::App* special = app.add_subcommand(
      "special", "clan JSON on stdin -> simultaneously dual and conjugate representative");
  add_setup_flags(special, sf);

  CLI::App* dual = app.add_subcommand("dual", "orbit parameter JSON on stdin -> Matsuki dual");

  CLI::App* relpos =
      app.add_subcommand("relpos", R"(two flags {"F":..., "G":...} on stdin -> permutation)");
  int relpos_n = 0;
  relpos->add_option("--n", relpos_n, "flag dimension")->required();

  CLI::App* ind_check =
      app.add_subcommand("ind-check", "open/closed orbit criteria for an ind-setup");
  ind_check->add_option("--indsetup", indf.file, "JSON file with the ind-setup");
  ind_check->add_option("--type", indf.type, "type tag");
  ind_check->add_option("--omega-prefix", indf.omega_prefix, "leading blocks, e.g. B2,B1");
  ind_check->add_option("--omega-tail", indf.omega_tail, "repeated tail block: B1 or B2");
  ind_check->add_option("--signs-prefix", indf.signs_prefix, "leading signs");
  ind_check->add_option("--signs-tail", indf.signs_tail, "repeated sign period");
  ind_check->add_option("--order", indf.order, "NAT | TWOSIDED | DENSE | ISO_TWOSIDED");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (enumerate->parsed()) {
      SpaceSetup s = setup_from_flags(sf);
      for (const Clan& c : enumerate_params(s)) {
        if (format == "json") {
          out << dump_line(clan_to_json(c));
        } else if (format == "ascii") {
          out << render_link_pattern_ascii(c) << "\n";
        } else if (format == "dot") {
          out << render_link_pattern_dot(c);
        } else {
          throw std::runtime_error("unknown format " + format);
        }
      }
      return 0;
    }
    if (counts->parsed()) {
      SpaceSetup s = setup_from_flags(sf);
      long open = s.type == TypeTag::D3 ? 2 : 1;
      out << dump_line(
          json{{"params", count_params(s)}, {"closed", count_closed(s)}, {"open", open}});
      return 0;
    }
    if (classify_cmd->parsed()) {
      SpaceSetup s = setup_from_flags(sf);
      Flag f = flag_from_json(read_json(in), s.tower);
      Family fam = family == "G0" ? Family::G0_side : Family::K_side;
      out << dump_line(orbit_param_to_json(classify(f, s, fam)));
      return 0;
    }
    if (represent->parsed() || special->parsed()) {
      SpaceSetup s = setup_from_flags(sf);
      json j = read_json(in);
      Family fam = family == "G0" ? Family::G0_side : Family::K_side;
      OrbitParam p = j.contains("family") ? orbit_param_from_json(j)
                                          : OrbitParam{clan_from_json(j), fam, s.type};
      out << dump_line(flag_to_json(build_representative(p, s)));
      return 0;
    }
    if (dual->parsed()) {
      out << dump_line(orbit_param_to_json(matsuki_dual(orbit_param_from_json(read_json(in)))));
      return 0;
    }
    if (relpos->parsed()) {
      TowerPtr tower = Tower::make();
      tower->adjoin_sqrt(tower->integer(2));  // r1 = sqrt(2) in CLI contexts
      json j = read_json(in);
      Flag f = flag_from_json(j.at("F"), tower);
      Flag g = flag_from_json(j.at("G"), tower);
      if (f.n() != relpos_n || g.n() != relpos_n)
        throw std::runtime_error("flag dimension does not match --n");
      out << dump_line(json{{"perm", relative_position(f, g).perm}});
      return 0;
    }
    if (ind_check->parsed()) {
      IndSetup s = ind_setup_from_flags(indf, in);
      CriterionResult open_k = has_open_orbit(s, Family::K_side);
      CriterionResult closed_k = has_closed_orbit(s, Family::K_side);
      CriterionResult open_g = has_open_orbit(s, Family::G0_side);
      CriterionResult closed_g = has_closed_orbit(s, Family::G0_side);
      json j{{"open_K", criterion_to_json(open_k)["verdict"]},
             {"clause", open_k.clause},
             {"closed_K", criterion_to_json(closed_k)["verdict"]},
             {"closed_K_clause", closed_k.clause},
             {"open_G0", criterion_to_json(open_g)["verdict"]},
             {"closed_G0", criterion_to_json(closed_g)["verdict"]},
             {"reasons",
              json{{"open_K", open_k.reason}, {"closed_K", closed_k.reason}}}};
      out << dump_line(j);
      return 0;
    }
    err << "no subcommand\n";
    return 1;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace flagorbits
