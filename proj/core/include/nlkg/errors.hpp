#pragma once

#include <stdexcept>
#include <string>

namespace nlkg {

// Error taxonomy. The CLI maps categories to process exit codes:
// invalid input -> 2, unsupported class -> 3, numerical failure -> 4.
class error : public std::runtime_error {
  public:
    enum class kind { invalid_input, unsupported_class, numerical };

    error(kind k, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(k), code_(std::move(code)) {}

    kind category() const { return kind_; }
    const std::string& code() const { return code_; }

  private:
    kind kind_;
    std::string code_;
};

struct invalid_transform : error {
    explicit invalid_transform(const std::string& msg)
        : error(kind::invalid_input, "invalid-transform", msg) {}
};

struct not_in_z : error {
    explicit not_in_z(const std::string& msg)
        : error(kind::invalid_input, "not-in-z", msg) {}
};

struct not_rank_one : error {
    explicit not_rank_one(const std::string& msg)
        : error(kind::invalid_input, "not-rank-one", msg) {}
};

struct precondition_error : error {
    explicit precondition_error(const std::string& msg)
        : error(kind::invalid_input, "precondition", msg) {}
};

struct invalid_input : error {
    explicit invalid_input(const std::string& msg)
        : error(kind::invalid_input, "invalid-input", msg) {}
};

struct unsupported_class : error {
    explicit unsupported_class(const std::string& msg)
        : error(kind::unsupported_class, "unsupported-class", msg) {}
};

struct degenerate_tangency : error {
    explicit degenerate_tangency(const std::string& msg)
        : error(kind::numerical, "degenerate-tangency", msg) {}
};

struct inconsistent_extraction : error {
    explicit inconsistent_extraction(const std::string& msg)
        : error(kind::numerical, "inconsistent-extraction", msg) {}
};

// Carries the last time/parameter at which the state was still finite.
struct blow_up : error {
    blow_up(const std::string& msg, double last_valid)
        : error(kind::numerical, "blow-up", msg), last_valid_time(last_valid) {}
    double last_valid_time;
};

}  // namespace nlkg
