def sample_armature(armature, frame_list):
    """Sample the armature's world-space root location at each listed frame."""
    import bpy
    scene = bpy.context.scene
    records = []
    for frame in frame_list:
        clamped = max(scene.frame_start, min(int(frame), scene.frame_end))
        if clamped != int(frame):
            print("WARNING: frame %s outside animation range; clamped to %d" % (frame, clamped))
        scene.frame_set(clamped)
        location = armature.matrix_world.translation
        records.append((clamped, (float(location[0]), float(location[1]), float(location[2]))))
    return records
