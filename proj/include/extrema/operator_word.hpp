#ifndef EXTREMA_OPERATOR_WORD_HPP
#define EXTREMA_OPERATOR_WORD_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extrema {

enum class Step : char { Up = 'U', Down = 'D' };

/// Ascent/descent pattern of consecutive values. A word of length k
/// describes k+1 values.
class OperatorWord {
public:
    OperatorWord() = default;
    explicit OperatorWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// Accepts strings over {U, D}; throws std::invalid_argument otherwise.
    static OperatorWord parse(std::string_view text);

    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const std::vector<Step>& steps() const { return steps_; }

    /// Reverse the word and swap U with D: the pattern of the same values
    /// read backwards.
    OperatorWord time_reversed() const;

    std::string to_string() const;

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

private:
    std::vector<Step> steps_;
};

}  // namespace extrema

#endif  // EXTREMA_OPERATOR_WORD_HPP
