def animate_camera(waypoints):
    """Key the scene camera along waypoints: each is a dict with frame, location, look_at."""
    import bpy
    cam = bpy.context.scene.camera
    if cam is None:
        raise RuntimeError("no camera in scene; call place_camera first")
    if not waypoints:
        raise ValueError("animate_camera needs at least one waypoint")
    for waypoint in waypoints:
        frame = int(waypoint["frame"])
        place_camera(waypoint["location"], waypoint["look_at"], waypoint.get("fov_degrees", 50.0))
        cam.keyframe_insert(data_path="location", frame=frame)
        cam.keyframe_insert(data_path="rotation_euler", frame=frame)
    return cam
