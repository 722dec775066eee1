#include "extrema/operator_word.hpp"

#include <stdexcept>

namespace extrema {

OperatorWord OperatorWord::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            default:
                throw std::invalid_argument("operator word: invalid letter '" + std::string(1, text[i]) +
                                            "' at offset " + std::to_string(i));
        }
    }
    return OperatorWord(std::move(steps));
}

OperatorWord OperatorWord::time_reversed() const {
    std::vector<Step> out(steps_.rbegin(), steps_.rend());
    for (auto& s : out) s = s == Step::Up ? Step::Down : Step::Up;
    return OperatorWord(std::move(out));
}

std::string OperatorWord::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
}

}  // namespace extrema
