#include "robinfem/fields.hpp"

#include <cstdio>
#include <stdexcept>

namespace robinfem {

namespace {

double require_param(const std::map<std::string, double>& params, const std::string& key,
                     const std::string& preset) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("preset '" + preset + "' needs parameter '" + key + "'");
    return it->second;
}

std::string number_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

BoundaryField BoundaryField::constant(double value) {
    BoundaryField f;
    f.label_ = number_label(value);
    f.constant_ = true;
    f.value_ = value;
    f.eval_ = [value](Point2) { return value; };
    return f;
}

BoundaryField BoundaryField::custom(std::string label, std::function<double(Point2)> eval) {
    BoundaryField f;
    f.label_ = std::move(label);
    f.constant_ = false;
    f.eval_ = std::move(eval);
    return f;
}

BoundaryField BoundaryField::preset(const std::string& name,
                                    const std::map<std::string, double>& params) {
    if (name == "constant") {
        return constant(require_param(params, "value", name));
    }
    if (name == "mms_flux") {
        // Neumann trace of the reference solution u(x,y) = y on a disk of
        // radius R: du/dn = y/R on the circle.
        const double R = require_param(params, "R", name);
        if (!(R > 0.0)) throw std::invalid_argument("mms_flux: R must be positive");
        return custom("mms_flux(R=" + number_label(R) + ")",
                      [R](Point2 p) { return p.y / R; });
    }
    if (name == "mms_robin") {
        // Robin data that makes u(x,y) = y solve
        // du/dn + varphi*u + psi*u^2 = g on the circle of radius R.
        const double R = require_param(params, "R", name);
        const double a = require_param(params, "varphi", name);
        const double b = require_param(params, "psi", name);
        if (!(R > 0.0)) throw std::invalid_argument("mms_robin: R must be positive");
        return custom("mms_robin(R=" + number_label(R) + ",varphi=" + number_label(a) +
                          ",psi=" + number_label(b) + ")",
                      [R, a, b](Point2 p) { return p.y / R + a * p.y + b * p.y * p.y; });
    }
    throw std::invalid_argument("unknown boundary field preset '" + name + "'");
}

double BoundaryField::constant_value() const {
    if (!constant_) throw std::logic_error("boundary field is not a constant");
    return value_;
}

} // namespace robinfem
