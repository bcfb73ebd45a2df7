#pragma once

// Streaming JSON emitter with caller-defined key order and fixed 6-digit
// decimals, used for every byte-stable output document.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gestc {

/// Fixed-point with 6 fractional digits; negative zero prints as 0.000000.
std::string format_fixed6(double value);

/// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

enum class NumberFormat { Fixed6, RoundTrip };

class JsonWriter {
 public:
  explicit JsonWriter(NumberFormat format = NumberFormat::Fixed6) : format_(format) {}

  /// Pretty-printed with two-space indentation. Containers opened with
  /// `compact = true` are written on one line.
  JsonWriter& begin_object(bool compact = false);
  JsonWriter& end_object();
  JsonWriter& begin_array(bool compact = false);
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

  /// Finished document with a trailing newline.
  std::string str() const { return out_ + "\n"; }

 private:
  struct Frame {
    bool compact;
    bool empty = true;
  };
  void before_value();
  void newline();
  void close(char c);

  NumberFormat format_;
  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace gestc
