#include "softtop/space_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokenize(std::string_view line) {
  // '=' is structural; give it room so "e1=h1 h2" and "e1 = h1 h2" agree.
  std::string spaced;
  spaced.reserve(line.size() + 2);
  for (char c : line) {
    if (c == '=') {
      spaced += " = ";
    } else {
      spaced += c;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_directive(const std::string& tok) {
  return tok == "universe" || tok == "params" || tok == "set" || tok == "topology";
}

struct RawSet {
  std::string name;
  int line = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> slices;
};

}  // namespace

const SoftSet& SpaceFile::set_by_name(std::string_view name) const {
  for (const auto& [n, s] : named_sets)
    if (n == name) return s;
  throw UnknownNameError("unknown set '" + std::string(name) + "'");
}

SpaceFile parse_space_file(std::string_view text) {
  std::vector<std::string> universe;
  std::vector<std::string> params;
  int universe_line = 0, params_line = 0, topology_line = 0;
  bool saw_topology = false;
  std::vector<std::string> topology_names;
  std::vector<RawSet> raw_sets;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens.front();

    if (head == "universe") {
      if (universe_line) throw ParseError(line_no, "duplicate universe directive");
      if (tokens.size() < 2) throw ParseError(line_no, "universe needs at least one element");
      universe.assign(tokens.begin() + 1, tokens.end());
      universe_line = line_no;
    } else if (head == "params") {
      if (!universe_line) throw ParseError(line_no, "params before universe");
      if (params_line) throw ParseError(line_no, "duplicate params directive");
      if (tokens.size() < 2) throw ParseError(line_no, "params needs at least one parameter");
      params.assign(tokens.begin() + 1, tokens.end());
      params_line = line_no;
    } else if (head == "set") {
      if (!params_line) throw ParseError(line_no, "set before universe/params");
      if (saw_topology) throw ParseError(line_no, "set after topology directive");
      if (tokens.size() != 2) throw ParseError(line_no, "set needs exactly one name");
      const std::string& name = tokens[1];
      if (is_directive(name)) throw ParseError(line_no, "set name '" + name + "' is a reserved word");
      for (const auto& r : raw_sets)
        if (r.name == name) throw ParseError(line_no, "duplicate set name '" + name + "'");
      raw_sets.push_back({name, line_no, {}});
    } else if (head == "topology") {
      if (!params_line) throw ParseError(line_no, "topology before universe/params");
      if (saw_topology) throw ParseError(line_no, "duplicate topology directive");
      saw_topology = true;
      topology_line = line_no;
      topology_names.assign(tokens.begin() + 1, tokens.end());
      for (std::size_t i = 0; i < topology_names.size(); ++i)
        for (std::size_t j = i + 1; j < topology_names.size(); ++j)
          if (topology_names[i] == topology_names[j])
            throw ParseError(line_no, "set '" + topology_names[i] +
                                          "' listed twice in topology");
    } else {
      // Slice line "param = elements..." inside the current set block.
      if (raw_sets.empty()) throw ParseError(line_no, "slice line outside any set block");
      if (saw_topology) throw ParseError(line_no, "slice line after topology directive");
      if (tokens.size() < 2 || tokens[1] != "=")
        throw ParseError(line_no, "expected 'param = elements...'");
      auto& block = raw_sets.back();
      for (const auto& [p, _] : block.slices)
        if (p == head)
          throw ParseError(line_no, "parameter '" + head + "' assigned twice in set '" +
                                        block.name + "'");
      block.slices.push_back({head, {tokens.begin() + 2, tokens.end()}});
    }
  }

  if (!universe_line) throw ParseError(line_no, "missing universe directive");
  if (!params_line) throw ParseError(line_no, "missing params directive");

  SpaceFile file;
  try {
    file.context = SoftContext::make(universe, params);
  } catch (const Error& e) {
    throw ParseError(universe_line, e.what());
  }

  for (const auto& raw : raw_sets) {
    std::vector<std::vector<std::string>> slices(file.context->param_count());
    for (const auto& [pname, elems] : raw.slices) {
      auto p = file.context->find_param(pname);
      if (!p)
        throw ParseError(raw.line, "unknown parameter '" + pname + "' in set '" +
                                       raw.name + "'");
      slices[*p] = elems;
    }
    try {
      file.named_sets.emplace_back(raw.name,
                                   SoftSet::from_slices(file.context, slices));
    } catch (const Error& e) {
      throw ParseError(raw.line, std::string(e.what()) + " in set '" + raw.name + "'");
    }
  }

  file.topology_names = topology_names;
  std::vector<SoftSet> family{SoftSet::empty(file.context), SoftSet::full(file.context)};
  for (const auto& name : topology_names) {
    bool found = false;
    for (const auto& [n, s] : file.named_sets) {
      if (n == name) {
        family.push_back(s);
        found = true;
        break;
      }
    }
    if (!found)
      throw ParseError(topology_line, "topology lists undeclared set '" + name + "'");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  file.family = family;

  file.validation = SoftTopology::validate(file.context, file.family);
  if (file.validation.ok())
    file.topology = SoftTopology::from_family(file.context, file.family);
  return file;
}

SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_file(buf.str());
}

std::string render_space_file(const SpaceFile& file) {
  std::string out = "universe";
  for (const auto& name : file.context->universe()) out += " " + name;
  out += "\nparams";
  for (const auto& name : file.context->params()) out += " " + name;
  out += "\n";
  for (const auto& [name, set] : file.named_sets) {
    out += "set " + name + "\n";
    for (int e = 0; e < file.context->param_count(); ++e) {
      auto elems = set.slice_elements(e);
      if (elems.empty()) continue;
      out += "  " + file.context->param_name(e) + " =";
      for (const auto& el : elems) out += " " + el;
      out += "\n";
    }
  }
  out += "topology";
  for (const auto& name : file.topology_names) out += " " + name;
  out += "\n";
  return out;
}

namespace {

std::vector<std::string> split_trim(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    parts.push_back(trim(next == std::string_view::npos ? text.substr(pos)
                                                        : text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

SoftSet parse_set_expr(const ContextPtr& ctx, std::string_view expr) {
  std::vector<std::vector<std::string>> slices(ctx->param_count());
  std::vector<bool> assigned(ctx->param_count(), false);
  if (trim(expr).empty()) return SoftSet::from_slices(ctx, slices);

  for (const std::string& clause : split_trim(expr, ';')) {
    if (clause.empty()) throw ParseError(0, "empty clause in set expression");
    std::size_t eq = clause.find('=');
    if (eq == std::string::npos)
      throw ParseError(0, "clause '" + clause + "' has no '='");
    std::string pname = trim(std::string_view(clause).substr(0, eq));
    if (pname.empty())
      throw ParseError(0, "clause '" + clause + "' has no parameter name");
    int p = ctx->param_index(pname);
    if (assigned[p])
      throw ParseError(0, "parameter '" + pname + "' assigned twice in set expression");
    assigned[p] = true;

    std::string_view rest = std::string_view(clause).substr(eq + 1);
    auto names = split_trim(rest, ',');
    if (names.size() == 1 && names[0].empty()) continue;  // empty slice
    for (const auto& name : names) {
      if (name.empty())
        throw ParseError(0, "empty element name in clause '" + clause + "'");
      slices[p].push_back(name);
    }
  }
  return SoftSet::from_slices(ctx, slices);
}

}  // namespace softtop
