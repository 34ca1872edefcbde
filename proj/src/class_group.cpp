#include "toric/class_group.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

ClassElement ClassGroup::divisor_class(int i) const {
    if (i < 0 || i >= ray_count_)
        throw ValidationError("ray index " + std::to_string(i + 1) + " out of range");
    IntVec e(ray_count_);
    e[i] = 1;
    return class_of_divisor(e);
}

ClassElement ClassGroup::class_of_divisor(const IntVec& coeffs) const {
    if (static_cast<int>(coeffs.size()) != ray_count_)
        throw ValidationError("divisor vector has length " + std::to_string(coeffs.size()) +
                              ", expected " + std::to_string(ray_count_));
    IntVec y = u_.apply(coeffs);
    ClassElement out;
    out.free.assign(y.begin() + pivot_count_, y.end());
    out.residues.resize(torsion_rows_.size());
    for (size_t j = 0; j < torsion_rows_.size(); ++j)
        out.residues[j] = mod_floor(y[torsion_rows_[j]], torsion_[j]);
    return out;
}

ClassElement ClassGroup::zero() const {
    return ClassElement{IntVec(free_rank_), IntVec(torsion_.size())};
}

ClassElement ClassGroup::add(const ClassElement& a, const ClassElement& b) const {
    ClassElement out;
    out.free = vec_add(a.free, b.free);
    out.residues.resize(torsion_.size());
    for (size_t j = 0; j < torsion_.size(); ++j)
        out.residues[j] = mod_floor(a.residues[j] + b.residues[j], torsion_[j]);
    return out;
}

ClassElement ClassGroup::negate(const ClassElement& a) const {
    ClassElement out;
    out.free = vec_scale(-1, a.free);
    out.residues.resize(torsion_.size());
    for (size_t j = 0; j < torsion_.size(); ++j)
        out.residues[j] = mod_floor(-a.residues[j], torsion_[j]);
    return out;
}

ClassElement ClassGroup::scale(const Int& c, const ClassElement& a) const {
    ClassElement out;
    out.free = vec_scale(c, a.free);
    out.residues.resize(torsion_.size());
    for (size_t j = 0; j < torsion_.size(); ++j)
        out.residues[j] = mod_floor(c * a.residues[j], torsion_[j]);
    return out;
}

bool ClassGroup::is_zero(const ClassElement& a) const {
    return is_zero_vec(a.free) && is_zero_vec(a.residues);
}

IntVec ClassGroup::lift(const ClassElement& e) const {
    if (static_cast<int>(e.free.size()) != free_rank_ ||
        e.residues.size() != torsion_.size())
        throw ValidationError("class element shape does not match the group");
    IntVec y(ray_count_);
    for (int i = 0; i < free_rank_; ++i) y[pivot_count_ + i] = e.free[i];
    for (size_t j = 0; j < torsion_rows_.size(); ++j)
        y[torsion_rows_[j]] = mod_floor(e.residues[j], torsion_[j]);
    return u_inverse_.apply(y);
}

std::string ClassGroup::to_string(const ClassElement& e) const {
    std::ostringstream out;
    if (free_rank_ == 1) {
        out << e.free[0];
    } else if (free_rank_ > 1) {
        out << '(';
        for (int i = 0; i < free_rank_; ++i) {
            if (i) out << ',';
            out << e.free[i];
        }
        out << ')';
    }
    if (!torsion_.empty()) {
        if (free_rank_ > 0) out << " + ";
        out << '(';
        for (size_t j = 0; j < torsion_.size(); ++j) {
            if (j) out << ", ";
            out << e.residues[j] << " mod " << torsion_[j];
        }
        out << ')';
    }
    if (free_rank_ == 0 && torsion_.empty()) out << '0';
    return out.str();
}

std::string ClassGroup::group_to_string() const {
    std::ostringstream out;
    if (free_rank_ == 1)
        out << "Z";
    else if (free_rank_ > 1)
        out << "Z^" << free_rank_;
    for (const Int& d : torsion_) {
        if (out.tellp() > 0) out << " + ";
        out << "Z/" << d;
    }
    if (free_rank_ == 0 && torsion_.empty()) out << "0";
    return out.str();
}

ClassGroup compute_class_group(const Fan& fan) {
    if (!fan.complete())
        throw PreconditionError("class group computation requires a complete fan");
    IntMatrix a = fan.ray_matrix();
    SmithDecomposition snf = smith_normal_form(a);
    int r = fan.ray_count();
    int pivots = 0;
    for (const Int& d : snf.diagonal())
        if (d != 0) ++pivots;
    if (pivots != fan.dim())
        throw InternalError("rays of a complete fan must span the lattice");

    ClassGroup cg;
    cg.ray_count_ = r;
    cg.pivot_count_ = pivots;
    cg.free_rank_ = r - pivots;
    for (int i = 0; i < pivots; ++i) {
        const Int& d = snf.s.at(i, i);
        if (d >= 2) {
            cg.torsion_.push_back(d);
            cg.torsion_rows_.push_back(i);
        }
    }
    cg.u_ = snf.u;
    cg.u_inverse_ = inverse_unimodular(snf.u);
    cg.projection_ = IntMatrix(cg.free_rank_ + static_cast<int>(cg.torsion_.size()), r);
    for (int i = 0; i < cg.free_rank_; ++i)
        for (int j = 0; j < r; ++j) cg.projection_.at(i, j) = cg.u_.at(pivots + i, j);
    for (size_t t = 0; t < cg.torsion_rows_.size(); ++t)
        for (int j = 0; j < r; ++j)
            cg.projection_.at(cg.free_rank_ + static_cast<int>(t), j) =
                cg.u_.at(cg.torsion_rows_[t], j);
    return cg;
}

} // namespace toric
