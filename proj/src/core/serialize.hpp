#pragma once

#include <string>

#include "distance.hpp"
#include "frame_ode.hpp"
#include "frenet.hpp"
#include "nullcone.hpp"

namespace nullfront {

/// Fixed 17-significant-digit scientific form used by every CSV column.
std::string fmt17(double v);

std::string validation_report_json(const ValidationReport& rep, const std::string& curve_name);

std::string scan_report_json(const ScanResult& scan, const std::string& curve_name);

std::string condition_report_json(const ConditionReport& rep);

std::string congruence_report_json(const CongruenceResult& res, double s0);

std::string catalog_list_json();
std::string catalog_list_text();

/// CSV: s, alpha, ell, m, n, dalpha, dell, dm, dn over a uniform grid.
std::string curvature_table_csv(const FramedCurve& fc, double a, double b, int n);

/// CSV of FrenetData over a uniform grid; undefined fields stay empty.
std::string frenet_table_csv(const FramedCurve& fc, double a, double b, int n, double tol);

/// CSV: s, 16 frame components per integration state.
std::string frame_states_csv(const std::vector<FrameState>& states);
std::vector<FrameState> frame_states_from_csv(const std::string& text);

std::string mesh_obj(const FrontMesh& mesh);
std::string mesh_csv(const FrontMesh& mesh);

}  // namespace nullfront
