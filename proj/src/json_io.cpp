#include "cantor/json_io.hpp"

namespace cantor {

nlohmann::json decimal_to_json(const DecimalStream& s, std::size_t digits) {
    std::string int_part = (s.negative() ? "-" : "") + s.integer_magnitude().str();
    return {{"int", int_part}, {"digits", s.digits(digits)}};
}

DecimalStream decimal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("int") || !j.contains("digits") || !j["int"].is_string() ||
        !j["digits"].is_string()) {
        throw ParseError("decimal JSON needs string fields \"int\" and \"digits\"", 0);
    }
    std::string int_part = j["int"].get<std::string>();
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.erase(0, 1);
    return DecimalStream::terminating(negative, Natural::parse(int_part), j["digits"].get<std::string>());
}

}  // namespace cantor
