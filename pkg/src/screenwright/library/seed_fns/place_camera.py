def place_camera(location, look_at, fov_degrees):
    """Create or reuse the scene camera at location, aimed at look_at, with the given FOV."""
    import math
    import bpy
    from mathutils import Vector
    scene = bpy.context.scene
    cam = scene.camera
    if cam is None:
        cam_data = bpy.data.cameras.new("camera")
        cam = bpy.data.objects.new("camera", cam_data)
        scene.collection.objects.link(cam)
        scene.camera = cam
    cam.location = (float(location[0]), float(location[1]), float(location[2]))
    direction = Vector((float(look_at[0]), float(look_at[1]), float(look_at[2]))) - Vector(cam.location)
    cam.rotation_euler = direction.to_track_quat("-Z", "Y").to_euler()
    cam.data.angle = math.radians(float(fov_degrees))
    return cam
