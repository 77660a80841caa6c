/* Copyright 2026 The ccskp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccskp/export.hpp"
#include "ccskp/session.hpp"
#include "ccskp/theorems.hpp"
#include "json.hpp"

namespace ccskp::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DoesNotHold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string names = "a";
  std::string proc_names = "a,b";
  std::string keys = "1,2";
  std::size_t depth = 3;
  std::size_t max_size = 4;
  std::size_t state_cap = kDefaultStateCap;
  std::string format = "text";
  std::string dir = "all";
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InputError("empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Name> parse_names(const std::string& text) {
  std::vector<Name> out;
  if (text.empty()) return out;
  for (const auto& n : split(text)) {
    Process p;
    try {
      p = parse(n);
    } catch (const ParseError&) {
      throw InputError("not a channel name: '" + n + "'");
    }
    if (p.kind() != ProcessKind::Prefix || p.label().kind() != Label::Kind::Input || p.label().name().id != n) {
      throw InputError("not a channel name: '" + n + "'");
    }
    out.push_back(Name{n});
  }
  return out;
}

std::vector<Key> parse_keys(const std::string& text) {
  std::vector<Key> out;
  if (text.empty()) return out;
  for (const auto& k : split(text)) {
    if (k.find_first_not_of("0123456789") != std::string::npos) throw InputError("not a key: '" + k + "'");
    try {
      out.push_back(Key{std::stoull(k)});
    } catch (const std::out_of_range&) {
      throw InputError("key out of range: '" + k + "'");
    }
  }
  return out;
}

ProofLabel valid_label(const std::string& text) {
  ProofLabel t = parse_label(text);
  if (!is_valid(t)) throw InvalidLabel("not a valid proof label: " + text);
  return t;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw InputError("format '" + o.format + "' is not available for this command");
}

std::vector<Direction> directions(const Options& o) {
  if (o.dir == "forward") return {Direction::Forward};
  if (o.dir == "backward") return {Direction::Backward};
  return {Direction::Forward, Direction::Backward};
}

char letter(Direction d) { return d == Direction::Forward ? 'f' : 'b'; }

void list_steps(const Process& p, const std::vector<Direction>& dirs, std::ostream& out) {
  for (Direction d : dirs) {
    auto steps = d == Direction::Forward ? forward_steps(p) : backward_steps(p);
    for (std::size_t i = 0; i < steps.size(); ++i) out << letter(d) << i << ": " << to_line(steps[i]) << "\n";
  }
}

GraphOptions graph_options(const Options& o) { return GraphOptions{o.state_cap, {}}; }

Scale scale(const Options& o) {
  Scale s;
  s.process_names = parse_names(o.proc_names);
  s.max_ops = o.max_size;
  s.label_names = parse_names(o.names);
  s.label_keys = parse_keys(o.keys);
  s.depth = o.depth;
  s.state_cap = o.state_cap;
  return s;
}

// ---------------------------------------------------------------------------
// Commands

void cmd_parse(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text", "json"});
  Process p = parse(text);
  if (o.format == "json") {
    Json j;
    j["process"] = pretty_print(p);
    j["structure"] = structure(p);
    j["standard"] = is_std(p);
    out << j.dump() << "\n";
    return;
  }
  out << structure(p) << "\n";
}

void cmd_print(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text"});
  out << pretty_print(parse(text)) << "\n";
}

void cmd_steps(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text", "json"});
  Process p = parse(text);
  if (o.format == "json") {
    Json j = Json::object();
    for (Direction d : directions(o)) {
      auto steps = d == Direction::Forward ? forward_steps(p) : backward_steps(p);
      Json list = Json::array();
      for (const auto& t : steps) list.push_back(Json::parse(to_json(t)));
      j[d == Direction::Forward ? "forward" : "backward"] = list;
    }
    out << j.dump() << "\n";
    return;
  }
  list_steps(p, directions(o), out);
}

void cmd_check(const Options& o, const std::string& rel, const std::string& a, const std::string& b,
               std::ostream& out) {
  require_format(o, {"text", "json"});
  auto r = parse_relation(rel);
  if (!r) throw InputError("unknown relation '" + rel + "' (conn, dep or indep)");
  ProofLabel t1 = valid_label(a);
  ProofLabel t2 = valid_label(b);
  auto d = check(*r, t1, t2);
  if (o.format == "json") {
    Json j;
    j["relation"] = to_string(*r);
    j["holds"] = d.has_value();
    if (d) j["derivation"] = render(*d, t1, t2);
    out << j.dump() << "\n";
  } else if (d) {
    out << "holds\n" << render(*d, t1, t2);
  } else {
    out << "does not hold\n";
  }
  if (!d) throw DoesNotHold("");
}

void cmd_graph(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  auto g = build_graph(parse(text), graph_options(o));
  if (o.format == "dot") {
    out << to_dot(g);
  } else if (o.format == "json") {
    out << to_json(g) << "\n";
  } else {
    out << "states " << g.states().size() << ", edges " << g.edges().size() << "\n";
    for (std::size_t i = 0; i < g.states().size(); ++i) out << "s" << i << ": " << pretty_print(g.states()[i]) << "\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      out << "e" << i << ": s" << e.source << " -> s" << e.target << "  " << to_string(e.transition.label) << "\n";
    }
  }
}

void cmd_origin(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text"});
  try {
    out << pretty_print(origin(parse(text), graph_options(o))) << "\n";
  } catch (const NotReachable&) {
    out << "not reachable\n";
    throw DoesNotHold("");
  }
}

void cmd_reachable(const Options& o, const std::string& text, std::ostream& out) {
  require_format(o, {"text"});
  bool yes = is_reachable(parse(text), graph_options(o));
  out << (yes ? "reachable\n" : "not reachable\n");
  if (!yes) throw DoesNotHold("");
}

void print_path(const Path& p, std::ostream& out) {
  out << "path of length " << p.length() << "\n";
  for (const auto& s : p.steps) out << "  " << to_line(s) << "\n";
}

void cmd_connected(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  require_format(o, {"text", "json"});
  Process x = parse(a);
  Process y = parse(b);
  GraphOptions go = graph_options(o);
  KeySet keys = keys_of(x);
  for (Key k : keys_of(y)) keys.insert(k);
  go.key_pool.assign(keys.begin(), keys.end());
  auto g = build_graph(x, go);
  std::optional<Path> path;
  if (g.find_state(y)) path = find_path(g, x, y);
  if (o.format == "json") {
    Json j;
    j["connected"] = path.has_value();
    if (path) j["path"] = Json::parse(to_json(*path));
    out << j.dump() << "\n";
  } else if (path) {
    out << "connected\n";
    print_path(*path, out);
  } else {
    out << "not connected\n";
  }
  if (!path) throw DoesNotHold("");
}

void cmd_realise(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  require_format(o, {"text", "json"});
  ProofLabel t1 = valid_label(a);
  if (b.empty()) {
    auto w = realise(t1);
    if (o.format == "json") {
      Json j;
      j["realiser"] = pretty_print(w.realiser);
      j["step"] = Json::parse(to_json(w.step));
      out << j.dump() << "\n";
    } else {
      out << "realiser " << pretty_print(w.realiser) << "\n" << to_line(w.step) << "\n";
    }
    return;
  }
  ProofLabel t2 = valid_label(b);
  auto d = check_conn(t1, t2);
  if (!d) {
    out << (o.format == "json" ? "{\"connected\":false}\n" : "labels are not connected\n");
    throw DoesNotHold("");
  }
  auto w = realize_connected(*d, t1, t2);
  if (o.format == "json") {
    Json j;
    j["connected"] = true;
    j["t1"] = Json::parse(to_json(w.t1));
    j["t2"] = Json::parse(to_json(w.t2));
    j["link"] = Json::parse(to_json(w.link));
    out << j.dump() << "\n";
    return;
  }
  out << "t1 " << to_line(w.t1) << "\n";
  out << "t2 " << to_line(w.t2) << "\n";
  out << "link ";
  print_path(w.link, out);
}

void cmd_verify(const Options& o, const std::string& suite, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (!is_suite(suite)) throw InputError("unknown suite '" + suite + "' (loop, validity, thm1, thm2, lemmas, all)");
  auto reports = run_suite(suite, scale(o));
  out << (o.format == "json" ? to_json(reports) : summary_table(reports));
  for (const auto& r : reports) {
    if (!r.ok()) throw DoesNotHold("");
  }
}

void show(const Session& s, std::ostream& out) {
  out << "process: " << pretty_print(s.current()) << "\n";
  for (Direction d : {Direction::Forward, Direction::Backward}) {
    auto steps = s.steps(d);
    out << (d == Direction::Forward ? "forward:" : "backward:") << (steps.empty() ? " none" : "") << "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) out << "  " << letter(d) << " " << i << ": " << to_line(steps[i]) << "\n";
  }
}

void cmd_repl(const Options& o, const std::string& text, std::istream& in, std::ostream& out) {
  require_format(o, {"text"});
  Session s(parse(text));
  show(s, out);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd)) continue;
    if (cmd == "quit" || cmd == "q") break;
    if (cmd == "show") {
      show(s, out);
    } else if (cmd == "undo") {
      auto t = s.undo();
      if (!t) {
        out << "nothing to undo\n";
        continue;
      }
      out << "undid: " << to_line(*t) << "\n";
      show(s, out);
    } else if (cmd == "f" || cmd == "b") {
      std::string index;
      std::size_t n = 0;
      if (!(words >> index) || index.find_first_not_of("0123456789") != std::string::npos || index.size() > 9) {
        out << "usage: " << cmd << " N\n";
        continue;
      }
      n = std::stoul(index);
      Direction d = cmd == "f" ? Direction::Forward : Direction::Backward;
      auto t = s.apply(d, n);
      if (!t) {
        out << "no " << (d == Direction::Forward ? "forward" : "backward") << " step " << n << "\n";
        continue;
      }
      out << "applied: " << to_line(*t) << "\n";
      show(s, out);
    } else {
      out << "unknown command '" << cmd << "' (f N, b N, undo, show, quit)\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible CCS with proof labels: stepping, reachability, causality checks and verification"};
  app.name("ccskp");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--names", o.names, "Channel names of the label corpus (comma-separated)")->capture_default_str();
  app.add_option("--proc-names", o.proc_names, "Channel names of the process corpus (comma-separated)")
      ->capture_default_str();
  app.add_option("--keys", o.keys, "Keys of the label corpus (comma-separated)")->capture_default_str();
  app.add_option("--depth", o.depth, "Decorator depth bound of the label corpus")->capture_default_str();
  app.add_option("--max-size", o.max_size, "Operator bound of the process corpus")->capture_default_str();
  app.add_option("--state-cap", o.state_cap, "Largest transition graph explored")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--dir", o.dir, "Step direction filter")
      ->check(CLI::IsMember({"forward", "backward", "all"}))
      ->capture_default_str();

  std::string a, b, c;
  std::function<void()> action;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* parse_cmd = sub("parse", "Parse a process and show its structure");
  parse_cmd->add_option("process", a)->required();
  parse_cmd->callback([&] { action = [&] { cmd_parse(o, a, out); }; });

  auto* print_cmd = sub("print", "Parse a process and print it back");
  print_cmd->add_option("process", a)->required();
  print_cmd->callback([&] { action = [&] { cmd_print(o, a, out); }; });

  auto* steps_cmd = sub("steps", "List the enabled transitions");
  steps_cmd->add_option("process", a)->required();
  steps_cmd->callback([&] { action = [&] { cmd_steps(o, a, out); }; });

  auto* check_cmd = sub("check", "Decide conn, dep or indep on two proof labels");
  check_cmd->add_option("relation", a)->required();
  check_cmd->add_option("label1", b)->required();
  check_cmd->add_option("label2", c)->required();
  check_cmd->callback([&] { action = [&] { cmd_check(o, a, b, c, out); }; });

  auto* graph_cmd = sub("graph", "Export the transition graph");
  graph_cmd->add_option("process", a)->required();
  graph_cmd->callback([&] { action = [&] { cmd_graph(o, a, out); }; });

  auto* origin_cmd = sub("origin", "Print the standard origin of a process");
  origin_cmd->add_option("process", a)->required();
  origin_cmd->callback([&] { action = [&] { cmd_origin(o, a, out); }; });

  auto* reach_cmd = sub("reachable", "Is the process reachable from a standard one");
  reach_cmd->add_option("process", a)->required();
  reach_cmd->callback([&] { action = [&] { cmd_reachable(o, a, out); }; });

  auto* conn_cmd = sub("connected", "Find a path between two processes");
  conn_cmd->add_option("from", a)->required();
  conn_cmd->add_option("to", b)->required();
  conn_cmd->callback([&] { action = [&] { cmd_connected(o, a, b, out); }; });

  auto* realise_cmd = sub("realise", "Realise a label, or a connected pair of labels");
  realise_cmd->add_option("label1", a)->required();
  realise_cmd->add_option("label2", b);
  realise_cmd->callback([&] { action = [&] { cmd_realise(o, a, b, out); }; });

  auto* verify_cmd = sub("verify", "Run a verification suite: loop, validity, thm1, thm2, lemmas, all");
  verify_cmd->add_option("suite", a)->required();
  verify_cmd->callback([&] { action = [&] { cmd_verify(o, a, out); }; });

  auto* repl_cmd = sub("repl", "Step a process interactively (f N, b N, undo, show, quit)");
  repl_cmd->add_option("process", a)->required();
  repl_cmd->callback([&] { action = [&] { cmd_repl(o, a, in, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    action();
    return kOk;
  } catch (const DoesNotHold&) {
    return kDoesNotHold;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const StateCapExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ccskp::cli
