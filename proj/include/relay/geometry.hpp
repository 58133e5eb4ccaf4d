#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace relay {

// One 16-micro-step of either gimbal motor rotates the eye by this angle.
inline constexpr double kDegPerMicrostep = 0.1125;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double deg_to_rad(double d) { return d * M_PI / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / M_PI; }

// Screen/eye layout of the test bench. World frame: origin at the eye's
// rotation centre, +z toward the screen, +x to the eye's right, +y up.
// Pixel coordinates are continuous with (0,0) at the panel's top-left corner,
// x right, y down.
struct ViewingGeometry {
    double eye_to_screen_mm = 927.0;
    double screen_w_mm = 531.36;
    double screen_h_mm = 298.89;
    int screen_w_px = 1920;
    int screen_h_px = 1080;
    Vec2 screen_center_px{960.0, 540.0};  // pixel the neutral gaze hits

    double pixel_pitch_mm() const { return screen_w_mm / screen_w_px; }
    void validate() const;
};

// Eye orientation. The lower motor yaws the whole head assembly about the
// vertical axis, the upper motor pitches about the yawed horizontal axis
// (Fick order). Positive yaw looks right, positive pitch looks up.
struct GazeDirection {
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;
};

// Laser/mirror bench: canvas facing the eye, laser diode at the canvas centre.
struct LaserRig {
    double canvas_distance_mm = 700.0;
    double canvas_w_mm = 679.0;
    double canvas_h_mm = 498.0;

    void validate() const;
};

struct LaserSpot {
    double x_mm = 0.0;  // relative to the laser origin (canvas centre), +x right
    double y_mm = 0.0;  // +y up
    double reflection_angle_deg = 0.0;  // angle of the reflected ray off the canvas normal
    bool on_canvas = true;
};

double steps_to_deg(long long microsteps);
double pps_to_degps(double pps);

double px_offset_to_deg(double offset_px, const ViewingGeometry& geom);
double deg_to_px_offset(double offset_deg, const ViewingGeometry& geom);

// Unit gaze ray in the world frame.
Vec3 gaze_direction(const GazeDirection& g);

// Angle subtended at the eye between two gaze directions, in degrees.
double angle_between_gazes(const GazeDirection& a, const GazeDirection& b);

// Ray/screen intersection in pixels; nullopt when the gaze ray leaves the
// panel (the overshoot case).
std::optional<Vec2> gaze_to_screen_point(const GazeDirection& g, const ViewingGeometry& geom);

// Exact inverse of gaze_to_screen_point for any point on the panel.
GazeDirection screen_point_to_gaze(const Vec2& px, const ViewingGeometry& geom);

// Specular mirror mounted perpendicular to the gaze: the reflected laser
// leaves at twice the gaze angle. Off-canvas spots are still computed (plane
// intersection) and flagged.
LaserSpot laser_spot(const GazeDirection& g, const LaserRig& rig);

}  // namespace relay
