// CSV and JSON serialisation of sweep records.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <type_traits>
#include <vector>

#include "qotto/error.hpp"
#include "qotto/sweep.hpp"

namespace qotto {

namespace {

using nlohmann::json;

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

template <class T>
T parse_number(std::string_view text, std::string_view column) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError("records: cannot parse '" + std::string(text) + "' in column " +
                      std::string(column));
  }
  return value;
}

template <class T>
std::string value_to_text(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return format_real(v);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else if constexpr (std::is_same_v<T, SweepAxis>) {
    return std::string(to_string(v));
  } else {
    return std::to_string(v);
  }
}

template <class T>
T value_from_text(std::string_view text, std::string_view column) {
  if constexpr (std::is_same_v<T, std::string>) {
    return std::string(text);
  } else if constexpr (std::is_same_v<T, SweepAxis>) {
    return parse_axis(text);
  } else {
    return parse_number<T>(text, column);
  }
}

struct Column {
  std::string_view name;
  std::optional<SweepOutput> group;
  std::string (*to_text)(const RunRecord&);
  void (*from_text)(RunRecord&, std::string_view, std::string_view);
  void (*to_json)(const RunRecord&, json&, std::string_view);
  void (*from_json)(RunRecord&, const json&, std::string_view);
};

template <auto Member>
Column column(std::string_view name, std::optional<SweepOutput> group = std::nullopt) {
  using Field = std::remove_cvref_t<decltype(std::declval<RunRecord&>().*Member)>;
  Column c{name, group, nullptr, nullptr, nullptr, nullptr};
  c.to_text = [](const RunRecord& r) -> std::string {
    const Field& f = r.*Member;
    if constexpr (is_optional<Field>::value) {
      return f ? value_to_text(*f) : std::string{};
    } else {
      return value_to_text(f);
    }
  };
  c.from_text = [](RunRecord& r, std::string_view text, std::string_view col) {
    Field& f = r.*Member;
    if constexpr (is_optional<Field>::value) {
      if (text.empty()) {
        f.reset();
      } else {
        f = value_from_text<typename Field::value_type>(text, col);
      }
    } else {
      f = value_from_text<Field>(text, col);
    }
  };
  c.to_json = [](const RunRecord& r, json& out, std::string_view col) {
    const Field& f = r.*Member;
    const std::string key(col);
    if constexpr (is_optional<Field>::value) {
      if (f) out[key] = *f;
    } else if constexpr (std::is_same_v<Field, SweepAxis>) {
      out[key] = std::string(to_string(f));
    } else {
      out[key] = f;
    }
  };
  c.from_json = [](RunRecord& r, const json& in, std::string_view col) {
    Field& f = r.*Member;
    const auto it = in.find(std::string(col));
    if (it == in.end() || it->is_null()) {
      if constexpr (is_optional<Field>::value) {
        f.reset();
        return;
      } else {
        throw ConfigError("records: JSON row lacks column " + std::string(col));
      }
    }
    if constexpr (is_optional<Field>::value) {
      f = it->template get<typename Field::value_type>();
    } else if constexpr (std::is_same_v<Field, SweepAxis>) {
      f = parse_axis(it->template get<std::string>());
    } else {
      f = it->template get<Field>();
    }
  };
  return c;
}

const std::vector<Column>& all_columns() {
  using O = SweepOutput;
  static const std::vector<Column> columns = {
      column<&RunRecord::index>("index"),
      column<&RunRecord::axis>("axis"),
      column<&RunRecord::axis_value>("axis_value"),
      column<&RunRecord::nu_cold_khz>("nu_cold_khz"),
      column<&RunRecord::nu_hot_khz>("nu_hot_khz"),
      column<&RunRecord::tau_us>("tau_us"),
      column<&RunRecord::g>("g"),
      column<&RunRecord::p_plus_cold>("p_plus_cold"),
      column<&RunRecord::p_plus_hot>("p_plus_hot"),
      column<&RunRecord::sigma>("sigma"),
      column<&RunRecord::xi>("xi", O::kXi),
      column<&RunRecord::eta>("eta", O::kEta),
      column<&RunRecord::eta_otto>("eta_otto", O::kEta),
      column<&RunRecord::work>("work_h_khz", O::kEta),
      column<&RunRecord::q_hot>("q_hot_h_khz", O::kEta),
      column<&RunRecord::q_cold>("q_cold_h_khz", O::kEta),
      column<&RunRecord::mode>("mode", O::kEta),
      column<&RunRecord::eta_g0>("eta_g0", O::kDeltaEtaVsG0),
      column<&RunRecord::delta_eta_vs_g0>("delta_eta_vs_g0", O::kDeltaEtaVsG0),
      column<&RunRecord::ref_tau_us>("ref_tau_us", O::kDeltaEtaVsG0),
      column<&RunRecord::eta_g0_ref_tau>("eta_g0_ref_tau", O::kDeltaEtaVsG0),
      column<&RunRecord::delta_eta_vs_g0_ref_tau>("delta_eta_vs_g0_ref_tau", O::kDeltaEtaVsG0),
      column<&RunRecord::c_exp>("c_exp", O::kCoherence),
      column<&RunRecord::c_comp>("c_comp", O::kCoherence),
      column<&RunRecord::quenched_eta>("quenched_eta", O::kQuenchedEta),
      column<&RunRecord::quenched_std_error>("quenched_std_error", O::kQuenchedEta),
      column<&RunRecord::quenched_n_effective>("quenched_n_effective", O::kQuenchedEta),
      column<&RunRecord::quenched_rejected>("quenched_rejected", O::kQuenchedEta),
      column<&RunRecord::seed>("seed"),
      column<&RunRecord::n_steps>("n_steps"),
      column<&RunRecord::code_version>("code_version"),
      column<&RunRecord::error>("error"),
  };
  return columns;
}

std::vector<const Column*> selected_columns(const std::vector<SweepOutput>& outputs) {
  std::vector<const Column*> out;
  for (const Column& c : all_columns()) {
    if (!c.group || std::find(outputs.begin(), outputs.end(), *c.group) != outputs.end()) {
      out.push_back(&c);
    }
  }
  return out;
}

const Column& column_named(std::string_view name) {
  for (const Column& c : all_columns()) {
    if (c.name == name) return c;
  }
  throw ConfigError("records: unknown column '" + std::string(name) + "'");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// RFC 4180 reader: quoted fields may hold commas, quotes and newlines.
std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) {
    throw ConfigError("records: unterminated quoted CSV field");
  }
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) {
    throw NumericalError("format_real: conversion failed");
  }
  return std::string(buf, ptr);
}

std::vector<std::string> record_columns(const std::vector<SweepOutput>& outputs) {
  std::vector<std::string> names;
  for (const Column* c : selected_columns(outputs)) names.emplace_back(c->name);
  return names;
}

std::string to_csv(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs) {
  const auto cols = selected_columns(outputs);
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i]->name;
  }
  out += '\n';
  for (const RunRecord& r : records) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cols[i]->to_text(r));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs) {
  const auto cols = selected_columns(outputs);
  json rows = json::array();
  for (const RunRecord& r : records) {
    json row = json::object();
    for (const Column* c : cols) c->to_json(r, row, c->name);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

void emit_csv(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs,
              const std::string& path) {
  write_file(path, to_csv(records, outputs));
}

void emit_json(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs,
               const std::string& path) {
  write_file(path, to_json(records, outputs));
}

std::vector<RunRecord> parse_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty()) {
    throw ConfigError("records: CSV has no header row");
  }
  std::vector<const Column*> header;
  for (const std::string& name : rows.front()) header.push_back(&column_named(name));

  std::vector<RunRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw ConfigError("records: CSV row " + std::to_string(r) + " has the wrong field count");
    }
    RunRecord rec;
    for (std::size_t i = 0; i < header.size(); ++i) {
      header[i]->from_text(rec, rows[r][i], header[i]->name);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RunRecord> parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("records: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ConfigError("records: JSON document must be an array of rows");
  }
  std::vector<RunRecord> records;
  for (const json& row : doc) {
    RunRecord rec;
    for (const auto& [key, value] : row.items()) {
      (void)value;
      column_named(key);  // rejects unknown keys
    }
    try {
      for (const Column& c : all_columns()) {
        if (row.contains(std::string(c.name))) c.from_json(rec, row, c.name);
      }
    } catch (const json::exception& e) {
      throw ConfigError(std::string("records: bad JSON value: ") + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace qotto
