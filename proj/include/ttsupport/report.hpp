#ifndef TTSUPPORT_REPORT_HPP
#define TTSUPPORT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace ttsupport {

/// One checked identity. On failure `expected`/`actual` hold the two canonical forms
/// that differed (or a witness description).
struct Check {
  enum class Status { Pass, Fail, Advisory };

  std::string name;
  Status status = Status::Pass;
  std::string expected;
  std::string actual;

  bool failed() const { return status == Status::Fail; }
};

inline const char* status_name(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Advisory: return "advisory";
  }
  return "?";
}

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }

  void expect(std::string name, bool ok, std::string detail = {}) {
    add({std::move(name), ok ? Check::Status::Pass : Check::Status::Fail, {}, ok ? std::string() : std::move(detail)});
  }

  /// Compares two values with ==, recording their to_string() forms on mismatch.
  template <class T>
  void expect_equal(std::string name, const T& expected, const T& actual) {
    const bool ok = expected == actual;
    add({std::move(name), ok ? Check::Status::Pass : Check::Status::Fail, ok ? std::string() : expected.to_string(),
         ok ? std::string() : actual.to_string()});
  }

  void advise(std::string name, std::string detail) {
    add({std::move(name), Check::Status::Advisory, {}, std::move(detail)});
  }

  void append(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks_) {
      c.name = prefix + c.name;
      checks_.push_back(std::move(c));
    }
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.failed()) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.failed();
    return n;
  }
  const std::vector<Check>& checks() const { return checks_; }

  std::string to_text() const {
    std::string out;
    for (const auto& c : checks_) {
      out += status_name(c.status);
      out += "  " + c.name;
      if (c.status == Check::Status::Advisory) {
        out += "\n      note: " + c.actual;
      } else if (c.status == Check::Status::Fail) {
        if (!c.expected.empty()) out += "\n      expected: " + c.expected;
        if (!c.actual.empty()) out += "\n      actual:   " + c.actual;
      }
      out += "\n";
    }
    return out;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace ttsupport

#endif  // TTSUPPORT_REPORT_HPP
