#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rte/dl_text.hpp"
#include "rte/pipeline.hpp"
#include "rte/saturation.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonArgs {
  std::string lexicon_path;
  std::string tbox_path;
  std::string wordlist_path = "data/wordlist.txt";
};

rte::pipeline::RteOptions make_options(const CommonArgs& args) {
  rte::pipeline::RteOptions opts;
  if (!args.lexicon_path.empty())
    opts.lexicon = rte::lexicon::load_lexicon_file(args.lexicon_path);
  if (!args.tbox_path.empty())
    opts.background = rte::dl::parse_kb(slurp(args.tbox_path)).tbox;
  return opts;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--lexicon", args.lexicon_path,
                  "lexical relation file (left<TAB>kind<TAB>right)");
  cmd->add_option("--tbox", args.tbox_path,
                  "extra background T-Box axioms (C => D lines)");
  cmd->add_option("--wordlist", args.wordlist_path, "word-list file")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Textual entailment over description-logic semantic graphs"};
  app.require_subcommand(1);

  CommonArgs check_args;
  std::string check_text, check_hyp;
  bool explain = false, dump_graphs = false, strict_injective = false;
  auto* check = app.add_subcommand("check", "decide whether text entails hypothesis");
  check->add_option("--text", check_text, "text sentence (T)")->required();
  check->add_option("--hyp", check_hyp, "hypothesis sentence (H)")->required();
  add_common(check, check_args);
  check->add_flag("--explain", explain, "log tableau rule applications to stderr");
  check->add_flag("--dump-graphs", dump_graphs, "print both saturated graphs");
  check->add_flag("--strict-injective", strict_injective,
                  "require an injective node mapping");

  CommonArgs eval_args;
  std::string corpus_path, format = "tsv";
  unsigned jobs = 1;
  auto* eval = app.add_subcommand("eval", "evaluate an annotated corpus");
  eval->add_option("--corpus", corpus_path, "corpus file")->required();
  add_common(eval, eval_args);
  eval->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  eval->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::string kb_path;
  auto* sat = app.add_subcommand("saturate", "saturate a knowledge-base file");
  sat->add_option("--kb", kb_path, "knowledge base (GCI and assertion lines)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      auto words = rte::sentence::load_wordlist_file(check_args.wordlist_path);
      auto opts = make_options(check_args);
      opts.match.injective = strict_injective;
      if (explain) opts.match.reasoner.trace = &std::cerr;
      auto result = rte::pipeline::rte_check(check_text, check_hyp, words, opts);
      std::cout << "entailed: " << (result.entailed ? "true" : "false") << "\n";
      if (result.witness) {
        std::cout << "witness:\n";
        for (const auto& [h, t] : result.witness->mapping)
          std::cout << "  " << h.name << " -> " << t.name << "\n";
      }
      if (dump_graphs) {
        std::cout << "text graph:\n" << rte::semgraph::dump_graph(result.text_graph)
                  << "hypothesis graph:\n"
                  << rte::semgraph::dump_graph(result.hyp_graph);
      }
    } else if (*eval) {
      auto words = rte::sentence::load_wordlist_file(eval_args.wordlist_path);
      auto corpus = rte::pipeline::load_corpus_file(corpus_path);
      auto report =
          rte::pipeline::evaluate(corpus, words, make_options(eval_args), jobs);
      std::cout << (format == "json" ? rte::pipeline::report_json(report)
                                     : rte::pipeline::report_tsv(report));
    } else if (*sat) {
      auto kb = rte::dl::parse_kb(slurp(kb_path));
      for (const auto& a : rte::dl::saturate(kb))
        std::cout << rte::dl::to_text(a) << "\n";
    }
  } catch (const rte::dl::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
