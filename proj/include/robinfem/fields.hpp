#pragma once

#include <functional>
#include <map>
#include <string>

#include "robinfem/types.hpp"

namespace robinfem {

// Scalar data living on a tagged boundary part. Run configs restrict values to
// constants and named presets; code may attach arbitrary evaluation rules.
class BoundaryField {
public:
    BoundaryField() : BoundaryField(constant(0.0)) {}

    static BoundaryField constant(double value);
    static BoundaryField preset(const std::string& name, const std::map<std::string, double>& params);
    static BoundaryField custom(std::string label, std::function<double(Point2)> eval);

    double operator()(const Point2& p) const { return eval_(p); }

    bool is_constant() const { return constant_; }
    bool is_zero() const { return constant_ && value_ == 0.0; }
    double constant_value() const;
    const std::string& label() const { return label_; }

private:
    std::string label_;
    bool constant_ = false;
    double value_ = 0.0;
    std::function<double(Point2)> eval_;
};

} // namespace robinfem
