#include "sosq/document.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace sosq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json provenance_to_json(const Provenance &p) {
  ordered_json args = ordered_json::object();
  for (const auto &[key, value] : p.args)
    args[key] = value;
  ordered_json inputs = ordered_json::array();
  for (const Provenance &in : p.inputs)
    inputs.push_back(provenance_to_json(in));
  return ordered_json{{"operation", p.operation},
                      {"args", std::move(args)},
                      {"inputs", std::move(inputs)}};
}

// Raised while walking the parsed tree; parse_document adds the text position.
struct PathError {
  std::string path;
  std::string message;
};

std::string escape_pointer(const std::string &key) {
  std::string out;
  for (char c : key)
    out += c == '~' ? std::string("~0") : c == '/' ? std::string("~1")
                                                   : std::string(1, c);
  return out;
}

[[noreturn]] void schema_fail(const std::string &path, const std::string &msg) {
  throw PathError{path, msg};
}

const ordered_json &require(const ordered_json &obj, const char *key,
                            const std::string &path) {
  auto it = obj.find(key);
  if (it == obj.end())
    schema_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const ordered_json &obj, std::initializer_list<const char *> keys,
               const std::string &path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char *k : keys)
      known = known || it.key() == k;
    if (!known)
      schema_fail(path + "/" + escape_pointer(it.key()), "unknown field \"" + it.key() + "\"");
  }
}

std::int64_t as_int(const ordered_json &v, const std::string &path) {
  if (v.is_number_unsigned()) {
    if (v.get<std::uint64_t>() >
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      schema_fail(path, "integer out of 64-bit range");
    return static_cast<std::int64_t>(v.get<std::uint64_t>());
  }
  // Integers too large for any 64-bit type arrive as floats.
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::trunc(d) == d && std::fabs(d) >= 0x1p63)
      schema_fail(path, "integer out of 64-bit range");
  }
  if (!v.is_number_integer())
    schema_fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::size_t as_count(const ordered_json &v, const std::string &path) {
  const std::int64_t x = as_int(v, path);
  if (x < 1)
    schema_fail(path, "expected a positive integer");
  return static_cast<std::size_t>(x);
}

Provenance provenance_from_json(const ordered_json &j,
                                const std::string &path) {
  if (!j.is_object())
    schema_fail(path, "provenance must be an object");
  only_keys(j, {"operation", "args", "inputs"}, path);
  Provenance p;
  const ordered_json &op = require(j, "operation", path);
  if (!op.is_string())
    schema_fail(path + "/operation", "expected a string");
  p.operation = op.get<std::string>();
  if (auto it = j.find("args"); it != j.end()) {
    if (!it->is_object())
      schema_fail(path + "/args", "expected an object");
    for (auto a = it->begin(); a != it->end(); ++a)
      p.args.emplace_back(a.key(), as_int(a.value(), path + "/args/" + a.key()));
  }
  if (auto it = j.find("inputs"); it != j.end()) {
    if (!it->is_array())
      schema_fail(path + "/inputs", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      p.inputs.push_back(provenance_from_json(
          (*it)[i], path + "/inputs/" + std::to_string(i)));
  }
  return p;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t skip_ws(std::string_view t, std::size_t i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' ||
                          t[i] == '\r'))
    ++i;
  return i;
}

// `i` points at an opening quote; returns the offset past the closing one.
std::size_t skip_string(std::string_view t, std::size_t i) {
  for (++i; i < t.size() && t[i] != '"'; ++i)
    if (t[i] == '\\')
      ++i;
  return i + 1;
}

std::string pointer_token(std::string_view quoted) {
  return escape_pointer(ordered_json::parse(quoted).get<std::string>());
}

// Byte offset of the value at a JSON pointer in text that is known to parse.
// Falls back to the start of the document.
std::size_t locate(std::string_view t, const std::string &target) {
  struct Frame {
    bool object;
    std::size_t index;
    std::string prefix;
  };
  std::vector<Frame> stack;
  std::string path;
  std::size_t i = 0;
  for (;;) {
    // Expecting a value at `path`.
    i = skip_ws(t, i);
    if (i >= t.size())
      return 0;
    if (path == target)
      return i;
    bool opened = false;
    if (t[i] == '{' || t[i] == '[') {
      const bool object = t[i] == '{';
      i = skip_ws(t, i + 1);
      if (i < t.size() && t[i] != (object ? '}' : ']')) {
        stack.push_back({object, 0, path});
        if (object) {
          const std::size_t end = skip_string(t, i);
          path += "/" + pointer_token(t.substr(i, end - i));
          i = skip_ws(t, end) + 1; // past ':'
        } else {
          path += "/0";
        }
        opened = true;
      } else {
        ++i;
      }
    } else if (t[i] == '"') {
      i = skip_string(t, i);
    } else {
      while (i < t.size() && t[i] != ',' && t[i] != ']' && t[i] != '}' &&
             t[i] != ' ' && t[i] != '\n' && t[i] != '\t' && t[i] != '\r')
        ++i;
    }
    if (opened)
      continue;
    // A value ended; move to the next sibling or close containers.
    for (;;) {
      if (stack.empty())
        return 0;
      i = skip_ws(t, i);
      if (i >= t.size())
        return 0;
      Frame &top = stack.back();
      if (t[i] == ',') {
        i = skip_ws(t, i + 1);
        if (top.object) {
          const std::size_t end = skip_string(t, i);
          path = top.prefix + "/" + pointer_token(t.substr(i, end - i));
          i = skip_ws(t, end) + 1;
        } else {
          path = top.prefix + "/" + std::to_string(++top.index);
        }
        break;
      }
      ++i; // closing bracket
      stack.pop_back();
    }
  }
}

SystemDocument parse_tree(const ordered_json &root);

} // namespace

std::string serialize(const SystemDocument &doc) {
  const HurwitzSystem &sys = doc.system;
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << ordered_json(doc.schema_version).dump()
     << ",\n";
  os << "  \"size\": [" << sys.r() << ", " << sys.s() << ", " << sys.n()
     << "],\n";
  os << "  \"matrices\": [\n";
  for (std::size_t m = 0; m < sys.r(); ++m) {
    const IntMatrix &a = sys[m];
    os << "    [\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      os << "      [";
      for (std::size_t j = 0; j < a.cols(); ++j)
        os << (j ? ", " : "") << a(i, j);
      os << (i + 1 < a.rows() ? "],\n" : "]\n");
    }
    os << (m + 1 < sys.r() ? "    ],\n" : "    ]\n");
  }
  os << "  ]";
  if (doc.provenance)
    os << ",\n  \"provenance\": " << provenance_to_json(*doc.provenance).dump();
  os << "\n}\n";
  return os.str();
}

SystemDocument parse_document(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    const auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    throw SchemaError("syntax error at line " + std::to_string(line) +
                      ", column " + std::to_string(col) + ": " + e.what());
  }
  try {
    return parse_tree(root);
  } catch (const PathError &e) {
    const auto [line, col] = line_col(text, locate(text, e.path));
    throw SchemaError("schema error at line " + std::to_string(line) +
                      ", column " + std::to_string(col) + " (" +
                      (e.path.empty() ? "/" : e.path) + "): " + e.message);
  }
}

namespace {

SystemDocument parse_tree(const ordered_json &root) {
  if (!root.is_object())
    schema_fail("", "document must be a JSON object");
  only_keys(root, {"schema_version", "size", "matrices", "provenance"}, "");

  const ordered_json &version = require(root, "schema_version", "");
  if (!version.is_string())
    schema_fail("/schema_version", "expected a string");
  if (version.get<std::string>() != kSchemaVersion)
    schema_fail("/schema_version", "unsupported schema version \"" +
                                       version.get<std::string>() +
                                       "\", expected \"" +
                                       std::string(kSchemaVersion) + "\"");

  const ordered_json &size = require(root, "size", "");
  if (!size.is_array() || size.size() != 3)
    schema_fail("/size", "expected [r, s, n]");
  const FormulaSize sz{as_count(size[0], "/size/0"),
                       as_count(size[1], "/size/1"),
                       as_count(size[2], "/size/2")};

  const ordered_json &mats = require(root, "matrices", "");
  if (!mats.is_array())
    schema_fail("/matrices", "expected an array");
  if (mats.size() != sz.r)
    schema_fail("/matrices", "size says r = " + std::to_string(sz.r) +
                                 " but " + std::to_string(mats.size()) +
                                 " matrices are present");
  std::vector<IntMatrix> matrices;
  matrices.reserve(sz.r);
  for (std::size_t m = 0; m < sz.r; ++m) {
    const std::string mpath = "/matrices/" + std::to_string(m);
    const ordered_json &mj = mats[m];
    if (!mj.is_array() || mj.size() != sz.n)
      schema_fail(mpath, "expected " + std::to_string(sz.n) + " rows");
    std::vector<Entry> entries;
    entries.reserve(sz.n * sz.s);
    for (std::size_t i = 0; i < sz.n; ++i) {
      const std::string rpath = mpath + "/" + std::to_string(i);
      const ordered_json &rj = mj[i];
      if (!rj.is_array() || rj.size() != sz.s)
        schema_fail(rpath, "expected " + std::to_string(sz.s) + " columns");
      for (std::size_t j = 0; j < sz.s; ++j)
        entries.push_back(as_int(rj[j], rpath + "/" + std::to_string(j)));
    }
    matrices.emplace_back(sz.n, sz.s, std::move(entries));
  }

  SystemDocument doc{std::string(kSchemaVersion),
                     HurwitzSystem(sz, std::move(matrices)), std::nullopt};
  if (auto it = root.find("provenance"); it != root.end() && !it->is_null())
    doc.provenance = provenance_from_json(*it, "/provenance");
  return doc;
}

} // namespace

} // namespace sosq
