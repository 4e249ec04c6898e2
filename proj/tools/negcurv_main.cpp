#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "negcurv/cli.hpp"
#include "negcurv/errors.hpp"

namespace {

Eigen::VectorXd parse_vector(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (...) {
      throw negcurv::InputError("cannot parse vector component: '" + token + "'");
    }
  }
  if (values.empty()) throw negcurv::InputError("empty vector argument");
  Eigen::VectorXd v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heintze criterion checks and left-invariant Finsler curvature tools"};
  app.require_subcommand(1);

  negcurv::RunConfig config;
  std::string pole_text, partner_text, target_text;
  std::map<std::string, double> tol_values;
  std::vector<std::pair<std::string, CLI::Option*>> tol_options;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--samples", config.samples, "sample or trial budget")->capture_default_str();
    cmd->add_option("--seed", config.seed, "random seed")->capture_default_str();
    cmd->add_option("--jobs", config.jobs, "worker count for scans (0 = hardware)")
        ->capture_default_str();
    cmd->add_option("--output", config.output, "report path, '-' for stdout")
        ->capture_default_str();
    const std::pair<std::string, std::string> tols[] = {
        {"commuting", "commuting-pair residual tolerance"},
        {"orthogonality", "pole orthogonality residual tolerance"},
        {"positivity", "relative positive-real-part threshold"},
        {"marginal", "margin below which verdicts are flagged marginal"}};
    for (const auto& [name, help] : tols)
      tol_options.emplace_back(name, cmd->add_option("--tol-" + name, tol_values[name], help));
  };

  auto* validate = app.add_subcommand("validate", "check structure-constant invariants");
  validate->add_option("algebra", config.algebra_path, "algebra JSON file")->required();
  add_common(validate);

  auto* check = app.add_subcommand("check", "decide the Heintze criterion");
  check->add_option("algebra", config.algebra_path, "algebra JSON file")->required();
  add_common(check);

  auto* curvature = app.add_subcommand("curvature", "homogeneous flag curvature of one flag");
  curvature->add_option("algebra", config.algebra_path, "algebra JSON file")->required();
  curvature->add_option("--metric", config.metric_path, "metric JSON file");
  curvature->add_option("--pole", pole_text, "flag pole, comma separated")->required();
  curvature->add_option("--partner", partner_text, "flag partner, comma separated")->required();
  add_common(curvature);

  auto* scan = app.add_subcommand("scan", "random flag curvature survey");
  scan->add_option("algebra", config.algebra_path, "algebra JSON file")->required();
  scan->add_option("--metric", config.metric_path, "metric JSON file");
  add_common(scan);

  auto* witness = app.add_subcommand("witness", "search for a non-negative curvature flag");
  witness->add_option("algebra", config.algebra_path, "algebra JSON file")->required();
  witness->add_option("--metric", config.metric_path, "metric JSON file");
  add_common(witness);

  auto* submersion = app.add_subcommand("submersion", "horizontal lift and isometry demo");
  submersion->add_option("--metric", config.metric_path, "metric JSON file")->required();
  submersion->add_option("--projection", config.projection_path, "projection JSON file")
      ->required();
  submersion->add_option("--target", target_text, "target vector, comma separated");
  add_common(submersion);

  auto* catalog = app.add_subcommand("catalog", "list the built-in algebra fixtures");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return negcurv::kExitError;
  }

  try {
    if (validate->parsed()) config.command = "validate";
    if (check->parsed()) config.command = "check";
    if (curvature->parsed()) config.command = "curvature";
    if (scan->parsed()) config.command = "scan";
    if (witness->parsed()) config.command = "witness";
    if (submersion->parsed()) config.command = "submersion";
    if (catalog->parsed()) config.command = "catalog";
    if (!pole_text.empty()) config.pole = parse_vector(pole_text);
    if (!partner_text.empty()) config.partner = parse_vector(partner_text);
    if (!target_text.empty()) config.target_vector = parse_vector(target_text);
    for (const auto& [name, option] : tol_options)
      if (option->count() > 0) config.tolerance_overrides[name] = tol_values[name];
    if (config.jobs <= 0)
      config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return negcurv::kExitError;
  }

  return negcurv::run(config);
}
