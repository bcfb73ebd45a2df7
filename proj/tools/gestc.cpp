// gestc: compile text into an affect-modulated robot gesture script.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gestc/json_writer.hpp"
#include "gestc/pipeline.hpp"
#include "gestc/templates.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

gestc::RankWeights parse_weights(const std::string& spec) {
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gestc::ConfigError("--weights: '" + item + "' is not a number");
    }
  }
  if (values.size() != 3) throw gestc::ConfigError("--weights expects three values a,p,s");
  return {values[0], values[1], values[2]};
}

// Writes every pending file to a sibling temporary, then renames them all into
// place. Nothing is moved unless every temporary was written.
class OutputSet {
 public:
  void add(fs::path path, std::string content) { files_.push_back({std::move(path), std::move(content)}); }

  void commit() {
    std::vector<fs::path> temps;
    try {
      for (const auto& f : files_) {
        fs::path tmp = f.path;
        tmp += ".tmp-gestc";
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        temps.push_back(tmp);
        out << f.content;
        out.close();
        if (!out) throw InputError("cannot write '" + f.path.string() + "'");
      }
      for (std::size_t i = 0; i < files_.size(); ++i) fs::rename(temps[i], files_[i].path);
    } catch (...) {
      std::error_code ec;
      for (const auto& t : temps) fs::remove(t, ec);
      throw;
    }
  }

 private:
  struct File {
    fs::path path;
    std::string content;
  };
  std::vector<File> files_;
};

std::string templates_document() {
  gestc::JsonWriter w;
  w.begin_object();
  w.key("templates").begin_array();
  for (const auto& t : gestc::template_library()) {
    w.begin_object();
    w.key("name").value(t.name);
    w.key("schema");
    if (t.schema) w.value(gestc::to_string(*t.schema)); else w.null();
    w.key("handedness").value(gestc::to_string(t.handedness));
    w.key("description").value(t.description);
    w.key("keyframes").begin_array();
    for (const auto& k : t.keyframes) {
      w.begin_object(true);
      w.key("phase").value(k.phase);
      w.key("left_wrist").begin_array();
      for (double c : k.left_wrist) w.value(c);
      w.end_array();
      w.key("right_wrist").begin_array();
      for (double c : k.right_wrist) w.value(c);
      w.end_array();
      w.key("hand_aperture").value(k.hand_aperture);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile text into a speech-synchronized robot gesture script"};
  app.require_subcommand(1);

  const fs::path data_dir = GESTC_DEFAULT_DATA_DIR;
  std::string input_path, text, output_path, explain_path, csv_path, weights_spec;
  std::string vad_path = (data_dir / "vad_lexicon.tsv").string();
  std::string schema_path = (data_dir / "schema_lexicon.json").string();
  std::string pos_path = (data_dir / "pos_resources.json").string();
  std::string robot_path;
  gestc::PipelineOptions opts;

  auto* compile = app.add_subcommand("compile", "Run the full pipeline on input text");
  auto* input_opt = compile->add_option("--input", input_path, "Input text file");
  compile->add_option("--text", text, "Input text")->excludes(input_opt);
  compile->add_option("--vad-lexicon", vad_path, "VAD lexicon (TSV)");
  compile->add_option("--schema-lexicon", schema_path, "Image-schema lexicon (JSON)");
  compile->add_option("--pos-resources", pos_path, "POS resources (JSON)");
  compile->add_option("--robot", robot_path, "Robot model (JSON); built-in model if omitted");
  compile->add_option("--rate-syllable-s", opts.timing.syllable_duration_s, "Seconds per syllable");
  compile->add_option("--gap-s", opts.timing.interword_gap_s, "Gap between words in seconds");
  compile->add_option("--pause-s", opts.timing.sentence_pause_s, "Pause between sentences in seconds");
  compile->add_option("--weights", weights_spec, "Ranker weights a,p,s (affect, POS, schema)");
  compile->add_option("--sample-rate", opts.sample_rate_hz, "Trajectory sample rate in Hz");
  compile->add_option("--jobs", opts.jobs, "Threads for per-sentence planning (1 = serial)");
  compile->add_option("--output", output_path, "Gesture script path (stdout if omitted)");
  compile->add_option("--explain", explain_path, "Write the per-stage trace to this path");
  compile->add_option("--csv", csv_path, "Write the joint trajectory CSV to this path");

  auto* templates = app.add_subcommand("templates", "Print the built-in gesture template library");
  templates->add_option("--output", output_path, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (templates->parsed()) {
      const std::string doc = templates_document();
      if (output_path.empty()) {
        std::cout << doc;
      } else {
        OutputSet out;
        out.add(output_path, doc);
        out.commit();
      }
      return kExitOk;
    }

    if (!weights_spec.empty()) opts.weights = parse_weights(weights_spec);
    opts.validate();
    gestc::ResourcePaths paths{vad_path, schema_path, pos_path, std::nullopt};
    if (!robot_path.empty()) paths.robot_model = robot_path;
    const gestc::Resources res = gestc::load_resources(paths);
    for (const auto& w : res.vad.warnings())
      std::cerr << "warning: " << vad_path << ":" << w.line_no << ": " << w.message << "\n";

    if (!input_path.empty()) {
      std::ifstream in(input_path, std::ios::binary);
      if (!in) throw InputError("cannot read input '" + input_path + "'");
      text = read_all(in);
    } else if (compile->count("--text") == 0) {
      text = read_all(std::cin);
    }

    const auto result = gestc::run_pipeline(text, res, opts);
    const std::string script = gestc::script_to_json(result.script);

    OutputSet out;
    if (!output_path.empty()) out.add(output_path, script);
    if (!explain_path.empty()) out.add(explain_path, gestc::explain_trace(text, result.plans, opts));
    if (!csv_path.empty()) out.add(csv_path, gestc::script_to_csv(result.script));
    out.commit();
    if (output_path.empty()) std::cout << script;
    return kExitOk;
  } catch (const gestc::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
