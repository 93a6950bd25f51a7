#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "wordlab/error.hpp"
#include "wordlab/render.hpp"

namespace wordlab::cli {

using nlohmann::json;

int CommandResult::exit_code() const noexcept {
  switch (status) {
    case Status::ok:
      return 0;
    case Status::usage_error:
      return 1;
    case Status::domain_error:
      return 2;
    case Status::resource_error:
      return 3;
  }
  return 1;
}

namespace {

bool zero_one(std::string const& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Parses words sharing one alphabet. 0/1 texts become words over {a, b}.
std::vector<Word> parse_words(std::vector<std::string> const& texts) {
  bool const binary_digits
      = std::all_of(texts.begin(), texts.end(), zero_one)
        && std::any_of(texts.begin(), texts.end(), [](auto const& s) { return !s.empty(); });
  std::vector<Word> out;
  if (binary_digits) {
    for (auto const& t : texts) {
      out.push_back(t.empty() ? Word() : Word::parse(t));
    }
    return out;
  }
  std::string all;
  for (auto const& t : texts) {
    all += t;
  }
  auto const alphabet = Alphabet::infer(all);
  for (auto const& t : texts) {
    out.push_back(Word::parse(t, alphabet));
  }
  return out;
}

Word parse_word(std::string const& text) { return parse_words({text}).front(); }

std::size_t node_budget() {
  char const* env = std::getenv("WORDLAB_BUDGET");
  if (env == nullptr || *env == '\0') {
    return default_node_budget;
  }
  std::string const text(env);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw CLI::ValidationError("WORDLAB_BUDGET", "must be a non-negative integer");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

json with_schema(std::string const& name, json body) {
  json out = {{"schema", "wordlab." + name + ".v1"}};
  out.update(body);
  return out;
}

json cells(std::vector<GridPoint> const& points) {
  json out = json::array();
  for (auto const& p : points) {
    out.push_back({p.i, p.j});
  }
  return out;
}

using Action = std::function<CommandResult()>;

CommandResult ok(std::string const& name, json body) {
  return {Status::ok, with_schema(name, std::move(body)), std::nullopt, {}};
}

CommandResult raw(std::string text) {
  return {Status::ok, json(), std::move(text), {}};
}

}  // namespace

CommandResult dispatch(std::vector<std::string> const& args) {
  CLI::App app{"wordlab: subword binomials, 2-binomial classes and fair words", "wordlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Action action;

  // String storage for positionals; CLI11 binds by reference.
  std::string w;
  std::string u;
  std::string v;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::uint64_t n3 = 0;
  int jobs = 0;

  {
    auto* c = app.add_subcommand("binom", "binom(w, u): occurrences of u as a subword of w");
    c->add_option("w", w)->required();
    c->add_option("u", u)->required();
    c->callback([&] {
      action = [&] {
        auto const words = parse_words({w, u});
        return ok("binom", {{"w", w}, {"u", u}, {"value", binom(words[0], words[1])}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("leftright", "Left(w) and Right(w) grid cells");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] {
        auto const word = parse_word(w);
        require_binary(word, "leftright");
        auto const left = left_set(word);
        auto const right = right_set(word);
        return ok("leftright", {{"word", word.str()},
                                {"left", cells(left)},
                                {"right", cells(right)},
                                {"left_count", left.size()},
                                {"right_count", right.size()}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("sums", "S_b(w) and S_b(mirror w) for every letter b");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] {
        auto const word = parse_word(w);
        json sums = json::object();
        for (char letter : word.alphabet().letters()) {
          sums[std::string(1, letter)] = {{"forward", sum_positions(word, letter)},
                                          {"mirror", sum_positions(mirror(word), letter)}};
        }
        return ok("sums", {{"word", word.str()}, {"sums", sums}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("matrices", "Parikh vector, precedence and Parikh matrices");
    c->add_option("w", w)->required();
    auto* parikh = c->add_flag("--parikh", "Only the Parikh matrix");
    auto* precedence = c->add_flag("--precedence", "Only pMat");
    auto* prime = c->add_flag("--pmat-prime", "Only pMat' (upper triangle)");
    parikh->excludes(precedence)->excludes(prime);
    precedence->excludes(prime);
    c->callback([&, parikh, precedence, prime] {
      action = [&, parikh, precedence, prime] {
        auto const word = parse_word(w);
        bool const all = !*parikh && !*precedence && !*prime;
        json body = {{"word", word.str()},
                     {"alphabet", word.alphabet().letters()},
                     {"parikh_vector", parikh_vector(word).counts}};
        if (all || *precedence) {
          body["precedence"] = serialize::matrix(precedence_matrix(word));
        }
        if (all || *prime) {
          body["pmat_prime"]
              = serialize::matrix(precedence_matrix(word, PrecedenceVariant::upper_only));
        }
        if (all || *parikh) {
          body["parikh"] = serialize::matrix(parikh_matrix(word));
        }
        return ok("matrices", body);
      };
    });
  }
  {
    auto* c = app.add_subcommand("equiv", "Is u 2-binomially equivalent to v");
    c->add_option("u", u)->required();
    c->add_option("v", v)->required();
    c->callback([&] {
      action = [&] {
        auto const words = parse_words({u, v});
        json body = {{"u", u}, {"v", v}, {"equivalent", equivalent_2binomial(words[0], words[1])}};
        if (words[0].alphabet().is_canonical_binary() && words[0].size() == words[1].size()) {
          body["distance"] = distance(words[0], words[1]);
        }
        return ok("equiv", body);
      };
    });
  }
  {
    auto* c = app.add_subcommand("derive", "Minimal rewriting derivation from u to v");
    c->add_option("u", u)->required();
    c->add_option("v", v)->required();
    c->callback([&] {
      action = [&] {
        auto const words = parse_words({u, v});
        auto const d = minimal_derivation(words[0], words[1]);
        return ok("derive", {{"u", words[0].str()},
                             {"v", words[1].str()},
                             {"distance", distance(words[0], words[1])},
                             {"length", d.length()},
                             {"steps", serialize::derivation(d)}});
      };
    });
  }
  for (std::string const name : {"init", "final"}) {
    auto* c = app.add_subcommand(
        name, name == "init" ? "Least word of the class (na, nb, m)"
                             : "Greatest word of the class (na, nb, m)");
    c->add_option("na", n1)->required();
    c->add_option("nb", n2)->required();
    c->add_option("m", n3)->required();
    c->callback([&, name] {
      action = [&, name] {
        ClassSignature const sig{n1, n2, n3};
        auto const word = name == "init" ? init_word(sig) : final_word(sig);
        return ok(name, {{"signature", serialize::signature(sig)}, {"word", word.str()}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("class", "Enumerate the class (na, nb, m) and its graph");
    c->add_option("na", n1)->required();
    c->add_option("nb", n2)->required();
    c->add_option("m", n3)->required();
    auto* dot = c->add_flag("--dot", "Graphviz output");
    auto* verify = c->add_flag("--verify", "Check the lattice structure");
    dot->excludes(verify);
    static std::map<std::string, Relation> const relations{{"spa", Relation::spa},
                                                           {"full", Relation::full}};
    auto relation = std::make_shared<Relation>(Relation::spa);
    c->add_option("--relation", *relation, "Edges: spa (covers, default) or full")
        ->transform(CLI::CheckedTransformer(relations, CLI::ignore_case));
    c->callback([&, dot, verify, relation] {
      action = [&, dot, verify, relation] {
        ClassSignature const sig{n1, n2, n3};
        auto const budget = node_budget();
        if (*verify) {
          auto body = serialize::lattice_report(lattice_report(sig, budget));
          body["signature"] = serialize::signature(sig);
          return ok("class.verify", body);
        }
        auto const g = cover_graph(sig, *relation, budget);
        if (*dot) {
          return raw(render_class_dot(g));
        }
        auto body = serialize::class_graph(g);
        body["size"] = g.nodes.size();
        return ok("class", body);
      };
    });
  }
  {
    auto* c = app.add_subcommand("partition", "Part_p(w) and Part_s(w)");
    c->add_option("w", w)->required();
    auto* prefix = c->add_flag("--prefix", "Only Part_p");
    auto* suffix = c->add_flag("--suffix", "Only Part_s");
    prefix->excludes(suffix);
    c->callback([&, prefix, suffix] {
      action = [&, prefix, suffix] {
        auto const word = parse_word(w);
        json body = {{"word", word.str()}};
        if (!*suffix) {
          body["prefix"] = serialize::partition(part_p(word));
        }
        if (!*prefix) {
          body["suffix"] = serialize::partition(part_s(word));
        }
        return ok("partition", body);
      };
    });
  }
  {
    auto* c = app.add_subcommand("count-partitions",
                                 "Partitions of n into k parts (zeros allowed), each <= l");
    c->add_option("n", n3)->required();
    c->add_option("k", n1)->required();
    c->add_option("l", n2)->required();
    c->callback([&] {
      action = [&] {
        return ok("count-partitions",
                  {{"n", n3}, {"k", n1}, {"l", n2}, {"value", count_partitions(n3, n1, n2)}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("fair", "Fairness analysis of w");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] { return ok("fair", serialize::fair_analysis(analyze(parse_word(w)))); };
    });
  }
  {
    auto* c = app.add_subcommand("fair-count", "Number of binary fair words of length n");
    c->add_option("n", n1)->required();
    static std::map<std::string, CountMethod> const methods{
        {"brute", CountMethod::brute}, {"signed", CountMethod::signed_sum}};
    auto method = std::make_shared<CountMethod>(CountMethod::signed_sum);
    c->add_option("--method", *method, "brute or signed (default)")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    c->add_option("--jobs", jobs, "Worker threads for brute (default: all)")
        ->check(CLI::NonNegativeNumber);
    c->callback([&, method] {
      action = [&, method] {
        auto const value = fair_count(n1, *method, std::nullopt, jobs);
        return ok("fair-count",
                  {{"n", n1},
                   {"method", *method == CountMethod::brute ? "brute" : "signed"},
                   {"value", value}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("fair-length", "Fair and palindromic lengths of w");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] {
        auto const word = parse_word(w);
        return ok("fair-length", {{"word", word.str()},
                                  {"fair_length", fair_length(word)},
                                  {"palindromic_length", palindromic_length(word)}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("fair-factors", "Distinct fair factors of w");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] {
        auto const word = parse_word(w);
        json factors = json::array();
        for (auto const& f : fair_factor_census(word)) {
          factors.push_back(f.str());
        }
        return ok("fair-factors",
                  {{"word", word.str()}, {"count", factors.size()}, {"factors", factors}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("lsq", "Exact least-squares line through a 0/1 word");
    c->add_option("w", w)->required();
    c->callback([&] {
      action = [&] {
        auto const word = parse_word(w);
        auto const fit = least_squares_fit(word);
        return ok("lsq", {{"word", w},
                          {"alpha", serialize::rational(fit.alpha)},
                          {"beta", serialize::rational(fit.beta)},
                          {"is_fair", is_fair(word)}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("balanced-fair",
                                 "Palindromic balanced fair word with k a's and l b's");
    c->add_option("k", n1)->required();
    c->add_option("l", n2)->required();
    c->callback([&] {
      action = [&] {
        return ok("balanced-fair",
                  {{"k", n1}, {"l", n2}, {"word", construct_balanced_fair(n1, n2).str()}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("tm-audit",
                                 "Largest fair length among factors of a Thue-Morse prefix");
    c->add_option("len", n1)->required();
    c->add_option("--jobs", jobs, "Worker threads (default: all)")
        ->check(CLI::NonNegativeNumber);
    c->callback([&] {
      action = [&] {
        return ok("tm-audit",
                  {{"length", n1}, {"max_fair_length", thue_morse_fair_length_audit(
                                                           n1, tm_audit_bound, jobs)}});
      };
    });
  }
  {
    auto* c = app.add_subcommand("render", "Draw the line (or diagonal) representation");
    c->add_option("w", w)->required();
    auto* svg = c->add_flag("--svg", "SVG output");
    auto* ascii = c->add_flag("--ascii", "ASCII output (default)");
    svg->excludes(ascii);
    static std::map<std::string, Shade> const shades{
        {"none", Shade::none}, {"left-right", Shade::left_right}, {"steps", Shade::steps}};
    auto shade = std::make_shared<Shade>(Shade::left_right);
    c->add_option("--shade", *shade, "left-right (default), steps or none")
        ->transform(CLI::CheckedTransformer(shades, CLI::ignore_case));
    auto* diagonal = c->add_flag("--diagonal", "Diagonal b-steps with the S_b areas");
    c->callback([&, svg, shade, diagonal] {
      action = [&, svg, shade, diagonal] {
        auto const word = parse_word(w);
        auto const style = *svg ? RenderStyle::svg : RenderStyle::ascii;
        return raw(*diagonal ? render_diagonal(word, style)
                             : render_line(word, style, *shade));
      };
    });
  }
  auto parts = std::make_shared<std::vector<std::size_t>>();
  {
    auto* c = app.add_subcommand("ferrers", "Ferrers diagram of a partition");
    c->add_option("parts", *parts)->required();
    c->callback([&, parts] {
      action = [&, parts] { return raw(render_ferrers(Partition(*parts))); };
    });
  }

  if (!args.empty() && !args[0].empty() && args[0][0] != '-'
      && app.get_subcommand_no_throw(args[0]) == nullptr) {
    return {Status::usage_error, json(), std::nullopt,
            "unknown subcommand '" + args[0] + "'\n\n" + app.help()};
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    return raw(app.help());
  } catch (CLI::CallForAllHelp const&) {
    return raw(app.help("", CLI::AppFormatMode::All));
  } catch (CLI::ParseError const& e) {
    return {Status::usage_error, json(), std::nullopt,
            std::string(e.what()) + "\n\n" + app.help()};
  }

  try {
    return action();
  } catch (DomainError const& e) {
    return {Status::domain_error, with_schema("error", {{"error", e.what()}}), std::nullopt,
            e.what()};
  } catch (ResourceError const& e) {
    return {Status::resource_error, with_schema("error", {{"error", e.what()}}), std::nullopt,
            e.what()};
  } catch (CLI::ValidationError const& e) {
    return {Status::usage_error, json(), std::nullopt, e.what()};
  }
}

}  // namespace wordlab::cli
