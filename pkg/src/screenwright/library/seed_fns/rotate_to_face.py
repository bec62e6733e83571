def rotate_to_face(obj, target_point):
    """Yaw the object in the XY plane so its +Y forward axis points at the target's XY position."""
    import math
    dx = float(target_point[0]) - obj.location[0]
    dy = float(target_point[1]) - obj.location[1]
    if abs(dx) < 1e-9 and abs(dy) < 1e-9:
        print("WARNING: rotate_to_face target coincides with object in XY; rotation unchanged")
        return
    yaw = math.atan2(dy, dx) - math.pi / 2.0
    obj.rotation_euler = (obj.rotation_euler[0], obj.rotation_euler[1], yaw)
