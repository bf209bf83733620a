#ifndef ECC_DEADLINE_HPP
#define ECC_DEADLINE_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace ecc {

struct Timeout : std::runtime_error {
    Timeout() : std::runtime_error("time limit exceeded") {}
};

// Wall-clock cutoff shared by solvers and the experiment harness. A
// default-constructed deadline never expires.
class Deadline {
public:
    Deadline() = default;

    static Deadline after(std::chrono::milliseconds ms) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + ms;
        return d;
    }

    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

    void check() const {
        if (expired()) throw Timeout{};
    }

    bool active() const { return at_.has_value(); }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

} // namespace ecc

#endif // ECC_DEADLINE_HPP
