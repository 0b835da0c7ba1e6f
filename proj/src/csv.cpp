#include "popsynth/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "popsynth/errors.hpp"

namespace popsynth::csv {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

void for_each_row(const std::string& path, std::string_view expected_header,
                  const std::function<void(const Row&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");

  const std::size_t expected_fields = split(expected_header).size();
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != expected_header) {
        throw ParseError(path + ":1: expected header '" + std::string(expected_header) +
                         "', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    Row row{line_no, split(line)};
    if (row.fields.size() != expected_fields) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(expected_fields) + " fields, got " +
                       std::to_string(row.fields.size()));
    }
    fn(row);
  }
  if (!header_seen && expected_fields > 0) {
    // Empty file: treated as a file with a missing header only when truly empty.
    if (in.eof() && line_no == 0) return;
  }
}

Writer::Writer(std::string path) : path_(std::move(path)) {
  file_ = std::fopen(path_.c_str(), "wb");
  if (file_ == nullptr) {
    throw ParseError(path_ + ": cannot open for writing: " + std::strerror(errno));
  }
  buf_.reserve(1 << 20);
}

Writer::~Writer() { close(); }

void Writer::line(std::string_view text) {
  buf_.append(text);
  buf_.push_back('\n');
  if (buf_.size() > (1 << 20)) flush();
}

void Writer::flush() {
  if (file_ != nullptr && !buf_.empty()) {
    std::fwrite(buf_.data(), 1, buf_.size(), static_cast<std::FILE*>(file_));
    buf_.clear();
  }
}

void Writer::close() {
  if (file_ != nullptr) {
    flush();
    std::fclose(static_cast<std::FILE*>(file_));
    file_ = nullptr;
  }
}

std::int64_t parse_count(std::string_view field, const std::string& context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(context + ": not an integer: '" + std::string(field) + "'");
  }
  return value;
}

} // namespace popsynth::csv
