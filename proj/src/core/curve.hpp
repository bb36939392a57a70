#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "expr.hpp"
#include "jet.hpp"

namespace nullfront {

/// Analytic definition of one Vec4-valued map of s: name, four component
/// expressions and the pseudo-sphere the image is expected to lie on.
struct CurveSpec {
    std::string name;
    std::array<Expr, 4> components;
    PseudoSphereKind intended_sphere = PseudoSphereKind::AdS3;

    Vec4J4 eval_jets(double s) const;
    Vec4 eval(double s) const;

    static CurveSpec from_strings(std::string name, const std::array<std::string, 4>& comps,
                                  PseudoSphereKind sphere);
};

/// Uniformly usable curve-component source: analytic or sampled.
class Vec4Function {
public:
    virtual ~Vec4Function() = default;
    virtual Vec4J4 eval_jets(double s) const = 0;
};

class AnalyticVec4 : public Vec4Function {
public:
    explicit AnalyticVec4(CurveSpec spec) : spec_(std::move(spec)) {}
    Vec4J4 eval_jets(double s) const override { return spec_.eval_jets(s); }
    const CurveSpec& spec() const { return spec_; }

private:
    CurveSpec spec_;
};

/**
 * Sampled data on a strictly increasing grid.  Jets come from local
 * quintic Newton interpolants (window of 6 nearest samples) evaluated in
 * jet arithmetic, which differentiates the interpolant exactly.  This is
 * the lower-accuracy ingestion path for curves without closed forms.
 */
class SampledData {
public:
    SampledData(std::vector<double> grid, std::vector<std::vector<double>> columns);

    Jet4 eval_column(std::size_t col, double s) const;
    const std::vector<double>& grid() const { return grid_; }
    std::size_t column_count() const { return columns_.size(); }

private:
    std::vector<double> grid_;
    std::vector<std::vector<double>> columns_;
};

class SampledVec4 : public Vec4Function {
public:
    SampledVec4(std::shared_ptr<const SampledData> data, std::size_t first_col)
        : data_(std::move(data)), first_(first_col) {}
    Vec4J4 eval_jets(double s) const override {
        return {{data_->eval_column(first_, s), data_->eval_column(first_ + 1, s),
                 data_->eval_column(first_ + 2, s), data_->eval_column(first_ + 3, s)}};
    }

private:
    std::shared_ptr<const SampledData> data_;
    std::size_t first_;
};

/// One framed-curve definition from the built-in catalog.
struct CatalogEntry {
    std::string name;
    CurveSpec gamma, v1, v2;
    double a = 0.0, b = 0.0;
    std::string remark;  // shown in reports when non-empty
};

/// Throws UnknownCatalogEntry for names outside the catalog.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace nullfront
