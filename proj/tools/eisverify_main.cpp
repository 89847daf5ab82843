// Command line driver: runs verification suites, dumps the named objects,
// and manages the root-list cache.

#include "eis/suites.hpp"

#include <cstdlib>
#include <map>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for the Eisenstein mirror arrangement"};
  app.require_subcommand(1);

  eis::Config cfg;
  if (const char* env = std::getenv("EISVERIFY_CACHE_DIR")) cfg.cache_dir = env;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());

  std::string suites = "all";
  std::string sigma_t = "1/2";
  std::string cache_dir = cfg.cache_dir.string();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "comma-separated suite list, or 'all'");
  verify->add_option("--cache-dir", cache_dir, "root-list cache directory");
  verify->add_option("--threads", cfg.threads, "worker count for the heavy scans");
  verify->add_option("--batch-max", cfg.batch_depth, "deepest batch to enumerate (0..3)");
  verify->add_option("--sigma-t", sigma_t, "starting segment parameter for the descent search");
  verify->add_option("--report", cfg.report_format, "text or json");
  verify->add_flag("--fail-fast", cfg.fail_fast, "stop after the first failing suite");
  verify->add_option("--seed", cfg.seed, "seed for the randomized property checks");

  auto* dump = app.add_subcommand("dump", "print named vectors and Gram matrices");
  std::string relators;
  dump->add_option("--relators", relators,
                   "print a relator suite instead (gon-artin, gon-artin-d, gon-artin-i, "
                   "sphere-braid, moduli-space, neighborhood, conjugation)");

  auto* cache = app.add_subcommand("cache", "cache status or clear");
  std::string cache_action = "status";
  cache->add_option("action", cache_action, "status or clear");
  cache->add_option("--cache-dir", cache_dir, "root-list cache directory");

  auto* word = app.add_subcommand(
      "word", "evaluate reflection words (S0..S11, SA..SD, exponents, Delta(...))");
  std::vector<std::string> word_args;
  word->add_option("words", word_args, "one word (identity test) or two (comparison)")
      ->expected(1, 2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      cfg.cache_dir = cache_dir;
      cfg.sigma_t_start = eis::Rat::parse(sigma_t);
      cfg.suites.clear();
      std::string cur;
      for (char ch : suites + ",") {
        if (ch == ',') {
          if (!cur.empty()) cfg.suites.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      eis::RunReport run = eis::run_suites(cfg);
      if (cfg.report_format == "json")
        std::cout << eis::to_json(run).dump(2) << "\n";
      else
        std::cout << eis::render_text(run);
      return run.pass() ? 0 : 1;
    }
    if (dump->parsed()) {
      if (!relators.empty()) {
        static const std::map<std::string, eis::RelatorSuite> names = {
            {"gon-artin", eis::RelatorSuite::GonArtin},
            {"gon-artin-d", eis::RelatorSuite::GonArtinD},
            {"gon-artin-i", eis::RelatorSuite::GonArtinI},
            {"sphere-braid", eis::RelatorSuite::SphereBraid},
            {"moduli-space", eis::RelatorSuite::ModuliSpace},
            {"neighborhood", eis::RelatorSuite::NeighborhoodRelators},
            {"conjugation", eis::RelatorSuite::ConjugationTables},
        };
        auto it = names.find(relators);
        if (it == names.end()) {
          std::cerr << "error: unknown relator suite '" << relators << "'\n";
          return 2;
        }
        std::cout << eis::relators_to_text(eis::relator_suite(it->second));
        return 0;
      }
      std::cout << eis::dump_named_objects();
      return 0;
    }
    if (cache->parsed()) {
      if (cache_action == "clear") {
        eis::cache_clear(cache_dir);
        std::cout << "cache cleared\n";
        return 0;
      }
      auto statuses = eis::cache_status(cache_dir);
      if (statuses.empty()) std::cout << "no cache files in " << cache_dir << "\n";
      for (const auto& st : statuses)
        std::cout << st.file << "  " << (st.valid ? "valid" : "INVALID") << "  " << st.count
                  << " classes\n";
      return 0;
    }
    if (word->parsed()) {
      eis::ReflContext ctx;
      eis::Isometry lhs = ctx.eval(word_args[0]);
      eis::Isometry value =
          word_args.size() == 2 ? eis::iso_mul(lhs, eis::iso_inverse(ctx.eval(word_args[1])))
                                : lhs;
      const char* relation = word_args.size() == 2 ? "the words are equal" : "identity";
      if (eis::iso_equal(value, eis::iso_identity())) {
        std::cout << relation << " (exact matrix equality)\n";
        return 0;
      }
      if (auto s = eis::scalar_of(value)) {
        std::cout << relation << " up to the scalar " << s->str() << "\n";
        return 0;
      }
      std::cout << "not equal; evaluation is a nonscalar isometry\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
