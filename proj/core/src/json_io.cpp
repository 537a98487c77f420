#include "qswap/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qswap {

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

Json scalar_to_json(const Scalar& s) {
    return Json{{"rat", rational_to_string(s.rat_part())},
                {"sqrt2", rational_to_string(s.sqrt2_part())}};
}

std::string mode_to_string(Mode m, const Network& net) {
    return net.name(m.node) + (m.spin == Spin::Down ? "↓" : "↑");
}

Json state_to_json(const ManyBodyState& state, const Network& net) {
    Json terms = Json::array();
    for (const auto& [ket, coeff] : state.terms()) {
        auto modes = localized_modes(ket);
        if (!modes) {
            throw std::invalid_argument("state_to_json: state must be localized");
        }
        Json labels = Json::array();
        for (Mode m : *modes) labels.push_back(mode_to_string(m, net));
        terms.push_back(Json{{"ket", labels}, {"coeff", scalar_to_json(coeff)}});
    }
    return Json{
        {"statistics", state.statistics() == Statistics::Fermion ? "fermion" : "boson"},
        {"particles", state.particle_number()},
        {"terms", terms}};
}

}  // namespace qswap
