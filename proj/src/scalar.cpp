#include "coxstar/scalar.hpp"

namespace coxstar {

std::string Scalar::str() const {
    if (b_ == 0) return std::to_string(a_);
    std::string out;
    if (a_ != 0) out = std::to_string(a_);
    if (b_ == 1)
        out += out.empty() ? "phi" : "+phi";
    else if (b_ == -1)
        out += "-phi";
    else if (b_ > 0)
        out += (out.empty() ? "" : "+") + std::to_string(b_) + "phi";
    else
        out += std::to_string(b_) + "phi";
    return out;
}

}  // namespace coxstar
