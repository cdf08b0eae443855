#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "s3color/report.hpp"

namespace {

// Inputs may be given inline (family notation or diagram text) or as a path.
std::string slurp_input(const std::string& arg) {
  std::ifstream f(arg);
  if (f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;
}

int finish(const s3color::Report& r, bool json, bool payload_only) {
  if (json)
    std::cout << (payload_only ? r.payload : r.to_json()).dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S3 colorings, Fox colorings and determinants of link diagrams"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  auto with_json = [&json](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine-readable output");
    return cmd;
  };

  std::string input, coloring_file, family;
  unsigned long long seed = 1;
  int samples = 100, max_crossings = 16, q_max = 20, index_max = 7;

  CLI::App* c_classify =
      with_json(app.add_subcommand("classify", "achievable palette sizes with counts"));
  c_classify->add_option("input", input, "family notation or diagram file")
      ->required();

  CLI::App* c_det = with_json(app.add_subcommand("det", "link determinant"));
  c_det->add_option("input", input, "family notation or diagram file")
      ->required();

  CLI::App* c_solve = with_json(app.add_subcommand("solve", "list all valid colorings"));
  c_solve->add_option("input", input, "family notation or diagram file")
      ->required();

  CLI::App* c_gen =
      with_json(app.add_subcommand("gen", "generate a diagram file from family notation"));
  c_gen->add_option("family", family, "family notation, e.g. C(2,2) or T(2,4)")
      ->required();

  CLI::App* c_promote = with_json(app.add_subcommand(
      "promote", "grow a four-color coloring into a five-color one"));
  c_promote->add_option("input", input, "family notation or diagram file")
      ->required();
  c_promote->add_option("coloring", coloring_file,
                        "optional coloring file (found by search otherwise)");

  CLI::App* c_vt = with_json(app.add_subcommand("verify-torus", "check the T(2,q) facts"));
  c_vt->add_option("q_max", q_max, "largest q (default 20)")
      ->check(CLI::Range(2, 64));

  CLI::App* c_vj =
      with_json(app.add_subcommand("verify-j", "check the J(k,l) facts for odd k,l"));
  c_vj->add_option("index_max", index_max, "largest index (default 7)")
      ->check(CLI::Range(1, 15));

  CLI::App* c_vc = with_json(app.add_subcommand(
      "verify-conway", "randomized sweep over even twist vectors"));
  c_vc->add_option("--seed", seed, "PRNG seed (default 1)");
  c_vc->add_option("--samples", samples, "number of samples (default 100)")
      ->check(CLI::Range(1, 100000));
  c_vc->add_option("--max-crossings", max_crossings,
                   "crossing cap per sample (default 16)")
      ->check(CLI::Range(2, 24));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed())
      return finish(s3color::classify_report(s3color::load_input(slurp_input(input))),
                    json, true);
    if (c_det->parsed())
      return finish(s3color::det_report(s3color::load_input(slurp_input(input))),
                    json, true);
    if (c_solve->parsed())
      return finish(s3color::solve_report(s3color::load_input(slurp_input(input))),
                    json, true);
    if (c_gen->parsed()) return finish(s3color::gen_report(family), json, true);
    if (c_promote->parsed()) {
      s3color::Diagram d = s3color::load_input(slurp_input(input));
      if (!coloring_file.empty()) {
        // A supplied coloring pins the starting point; verify and promote it.
        s3color::Coloring c = s3color::parse_coloring_text(
            slurp_input(coloring_file), d.color_slots());
        s3color::PromotionResult pr = s3color::promote_to_five(d, c);
        s3color::Report r;
        r.command = "promote";
        r.items.push_back({"promoted coloring is valid and five-colored",
                           s3color::is_valid_coloring(pr.diagram, pr.coloring) &&
                               s3color::palette_size(pr.coloring) == 5,
                           ""});
        r.payload["diagram"] = s3color::emit_diagram(pr.diagram);
        r.text_body = s3color::emit_diagram(pr.diagram) + "\n" +
                      s3color::coloring_text(pr.coloring);
        return finish(r, json, true);
      }
      return finish(s3color::promote_report(d), json, true);
    }
    if (c_vt->parsed()) return finish(s3color::verify_torus(q_max), json, false);
    if (c_vj->parsed())
      return finish(s3color::verify_double_twist(index_max), json, false);
    if (c_vc->parsed())
      return finish(s3color::verify_conway(seed, samples, max_crossings), json,
                    false);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
