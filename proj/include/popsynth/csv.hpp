#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace popsynth::csv {

// Splits one line on commas. Fields in this project never contain commas or
// quotes, so no quoting rules apply.
std::vector<std::string_view> split(std::string_view line);

struct Row {
  std::size_t line_no = 0; // 1-based, header included
  std::vector<std::string_view> fields;
};

// Reads a CSV file, checks the exact header, and invokes `fn` per data row.
// Blank lines are skipped. Throws ParseError on missing file, wrong header,
// or a row with the wrong field count.
void for_each_row(const std::string& path, std::string_view expected_header,
                  const std::function<void(const Row&)>& fn);

// Buffered line writer; keeps large outputs cheap.
class Writer {
public:
  explicit Writer(std::string path);
  ~Writer();
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  void line(std::string_view text);
  void close();

private:
  std::string path_;
  std::string buf_;
  void* file_ = nullptr;
  void flush();
};

std::int64_t parse_count(std::string_view field, const std::string& context);

} // namespace popsynth::csv
