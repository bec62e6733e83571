def assign_motion(armature, motion_clip, start_frame, end_frame, start_point, end_point):
    """Play a rigged motion clip on the armature between two frames.

    The armature root is keyed to travel linearly from start_point to end_point
    over the same frame span.
    """
    import bpy
    action = bpy.data.actions.get(motion_clip)
    if action is None:
        raise KeyError("unknown motion clip: %s" % motion_clip)
    if int(end_frame) <= int(start_frame):
        raise ValueError("end_frame must be after start_frame")
    if armature.animation_data is None:
        armature.animation_data_create()
    track = armature.animation_data.nla_tracks.new()
    track.name = "%s_%s" % (motion_clip, int(start_frame))
    strip = track.strips.new(motion_clip, int(start_frame), action)
    strip.frame_end = int(end_frame)
    armature.location = (float(start_point[0]), float(start_point[1]), float(start_point[2]))
    armature.keyframe_insert(data_path="location", frame=int(start_frame))
    armature.location = (float(end_point[0]), float(end_point[1]), float(end_point[2]))
    armature.keyframe_insert(data_path="location", frame=int(end_frame))
